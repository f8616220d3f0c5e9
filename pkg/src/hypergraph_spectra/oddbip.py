"""Bipartiteness of graphs and odd-bipartiteness of even-uniform hypergraphs.

A hypergraph with even edge size k is odd-bipartite when its vertices split
into two classes such that every edge meets both in odd cardinality. Since k
is even the two conditions coincide, so the search is a single linear system
over GF(2): one parity row per edge, right-hand side all ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Bipartition, Hypergraph, SimpleGraph

__all__ = [
    "ParitySystem",
    "parity_system",
    "gf2_solve",
    "is_bipartite",
    "odd_bipartition",
    "verify_odd_bipartition",
]


@dataclass(frozen=True)
class ParitySystem:
    """Linear system over GF(2). Row i is a bitmask of variables; rhs[i] is
    the parity the selected variables must sum to."""

    n_vars: int
    rows: tuple[int, ...]
    rhs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_vars < 0:
            raise ValueError("variable count must be nonnegative")
        if len(self.rows) != len(self.rhs):
            raise ValueError("rows and rhs differ in length")
        limit = 1 << self.n_vars
        if any(not 0 <= r < limit for r in self.rows):
            raise ValueError("row mask out of range")
        if any(b not in (0, 1) for b in self.rhs):
            raise ValueError("rhs entries must be 0 or 1")


def parity_system(h: Hypergraph) -> ParitySystem:
    """One row per edge, marking its vertices; all parities required odd."""
    rows = tuple(sum(1 << v for v in e) for e in h.edges)
    return ParitySystem(h.n, rows, (1,) * h.m)


def gf2_solve(system: ParitySystem) -> int | None:
    """One solution as a bitmask, free variables forced to 0; None when
    the system is inconsistent."""
    n = system.n_vars
    var_mask = (1 << n) - 1
    pivots: list[tuple[int, int]] = []  # (pivot column, reduced augmented row)
    for mask, b in zip(system.rows, system.rhs):
        row = mask | (b << n)
        for col, prow in pivots:
            if (row >> col) & 1:
                row ^= prow
        if row & var_mask:
            low = row & -row
            col = low.bit_length() - 1
            for i, (c, p) in enumerate(pivots):
                if (p >> col) & 1:
                    pivots[i] = (c, p ^ row)
            pivots.append((col, row))
        elif row >> n:
            return None
    x = 0
    for col, prow in pivots:
        # After full reduction each pivot row holds its pivot plus free
        # columns only; with free variables at 0 the pivot equals the rhs.
        if prow >> n:
            x |= 1 << col
    return x


def is_bipartite(g: SimpleGraph) -> Bipartition | None:
    """A proper 2-coloring of g as a Bipartition, or None if an odd cycle
    exists. Isolated vertices land in the class of their component root."""
    color = [-1] * g.n
    adj = g.adjacency_lists()
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    part_one = frozenset(v for v in range(g.n) if color[v] == 0)
    b = Bipartition(part_one, frozenset(range(g.n)) - part_one)
    for u, v in g.edges:  # re-verify the certificate by edge scan
        if (u in b.part_one) == (v in b.part_one):
            raise RuntimeError("invalid 2-coloring produced")
    return b


def odd_bipartition(h: Hypergraph) -> Bipartition | None:
    """A bipartition meeting every edge of h oddly on both sides, or None.

    Only defined for even k. The certificate is re-verified before being
    returned.
    """
    if h.k % 2:
        raise ValueError("odd-bipartiteness needs even edge size")
    x = gf2_solve(parity_system(h))
    if x is None:
        return None
    part_one = frozenset(v for v in range(h.n) if (x >> v) & 1)
    b = Bipartition(part_one, frozenset(range(h.n)) - part_one)
    if not verify_odd_bipartition(h, b):
        raise RuntimeError("solver produced an invalid certificate")
    return b


def verify_odd_bipartition(h: Hypergraph, b: Bipartition) -> bool:
    """Check that b splits V(h) and meets every edge oddly on both sides."""
    if b.part_one | b.part_two != frozenset(range(h.n)) or (b.part_one & b.part_two):
        raise ValueError("not a partition of the vertex set")
    for e in h.edges:
        ones = sum(1 for v in e if v in b.part_one)
        if ones % 2 == 0 or (len(e) - ones) % 2 == 0:
            return False
    return True
