"""Exhaustive enumeration of small connected graphs up to isomorphism.

A graph on n vertices is packed into an integer code with one bit per
vertex pair. The canonical representative of an isomorphism class is the
smallest code over all vertex permutations; class enumeration scans every
labeled graph with numpy, keeps the connected ones (bitmask Warshall
closure), and discards a code as soon as some permutation maps it lower.
Whatever survives all permutations is exactly the set of canonical codes.

n = 8 means 2^28 labeled graphs and is gated behind big=True; the scan
then runs in chunks and takes minutes rather than seconds.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

import numpy as np

from .core import SimpleGraph
from .oddbip import is_bipartite

__all__ = [
    "graph_code",
    "graph_from_code",
    "canonical_code",
    "canonical_form",
    "enumerate_connected_graphs",
    "enumerate_connected_nonbipartite",
]

_BIG_N = 8
_CHUNK_BITS = 22


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: b for b, pair in enumerate(_pairs(n))}


def graph_code(g: SimpleGraph) -> int:
    """Pack the edge set of g into an integer, one bit per vertex pair."""
    idx = _pair_index(g.n)
    return sum(1 << idx[e] for e in g.edges)


def graph_from_code(n: int, code: int) -> SimpleGraph:
    pairs = _pairs(n)
    if not 0 <= code < (1 << len(pairs)):
        raise ValueError("code out of range")
    edges = tuple(pairs[b] for b in range(len(pairs)) if (code >> b) & 1)
    return SimpleGraph(n, edges)


@lru_cache(maxsize=4)
def _perm_bit_tables(n: int) -> np.ndarray:
    """dst[p, b]: where bit b moves under the p-th permutation of vertices."""
    pairs = _pairs(n)
    index = _pair_index(n)
    perms = list(itertools.permutations(range(n)))
    dst = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for p, perm in enumerate(perms):
        for b, (u, v) in enumerate(pairs):
            pu, pv = perm[u], perm[v]
            dst[p, b] = index[(pu, pv) if pu < pv else (pv, pu)]
    return dst


def _apply_perm(codes: np.ndarray, dst_row: np.ndarray) -> np.ndarray:
    mapped = np.zeros_like(codes)
    for b, d in enumerate(dst_row):
        mapped |= ((codes >> b) & 1) << int(d)
    return mapped


def canonical_code(n: int, code: int) -> int:
    """Smallest code among all relabelings: a complete isomorphism invariant
    for graphs small enough to enumerate permutations (n <= 8)."""
    if not 1 <= n <= _BIG_N:
        raise ValueError(f"n out of supported range: need 1 <= n <= {_BIG_N}")
    dst = _perm_bit_tables(n)
    mapped = np.zeros(dst.shape[0], dtype=np.int64)
    for b in range(dst.shape[1]):
        if (code >> b) & 1:
            mapped |= np.int64(1) << dst[:, b]
    return int(mapped.min()) if dst.shape[1] else 0


def canonical_form(g: SimpleGraph) -> SimpleGraph:
    """The canonical representative of g's isomorphism class."""
    return graph_from_code(g.n, canonical_code(g.n, graph_code(g)))


def _connected_mask(codes: np.ndarray, n: int) -> np.ndarray:
    """Boolean mask: which codes are connected graphs. Reachability rows are
    n-bit masks closed with Warshall's algorithm."""
    rows = [np.full(codes.shape, 1 << u, dtype=np.int64) for u in range(n)]
    for b, (u, v) in enumerate(_pairs(n)):
        bit = (codes >> b) & 1
        rows[u] |= bit << v
        rows[v] |= bit << u
    for k in range(n):
        rk = rows[k]
        for u in range(n):
            if u != k:
                rows[u] |= rk & -((rows[u] >> k) & 1)
    return rows[0] == (1 << n) - 1


def _survivor_codes(codes: np.ndarray, n: int) -> np.ndarray:
    """Filter to codes minimal under every vertex permutation."""
    dst = _perm_bit_tables(n)
    for p in range(1, dst.shape[0]):
        if codes.size == 0:
            break
        codes = codes[codes <= _apply_perm(codes, dst[p])]
    return codes


@lru_cache(maxsize=None)
def _connected_class_codes(n: int) -> tuple[int, ...]:
    nbits = n * (n - 1) // 2
    total = 1 << nbits
    chunk = 1 << min(nbits, _CHUNK_BITS)
    keep = []
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        codes = codes[_connected_mask(codes, n)]
        keep.append(_survivor_codes(codes, n))
    return tuple(int(c) for c in np.concatenate(keep))


def _check_range(n: int, big: bool, lo: int) -> None:
    if not lo <= n <= _BIG_N:
        raise ValueError(f"n out of supported range: need {lo} <= n <= {_BIG_N}")
    if n == _BIG_N and not big:
        raise ValueError("n = 8 scans 2^28 labeled graphs; pass big=True to allow it")


def enumerate_connected_graphs(n: int, big: bool = False) -> list[SimpleGraph]:
    """One canonical representative per isomorphism class of connected
    graphs on n vertices, in increasing code order."""
    _check_range(n, big, 1)
    return [graph_from_code(n, c) for c in _connected_class_codes(n)]


def enumerate_connected_nonbipartite(
    n: int, dedupe: bool = True, big: bool = False
) -> Iterator[SimpleGraph]:
    """Connected non-bipartite graphs on n vertices.

    With dedupe=True (the default) one canonical representative per
    isomorphism class is yielded; with dedupe=False every labeled graph is,
    which is exponential in n and only sensible for very small n.
    """
    _check_range(n, big, 3)
    if dedupe:
        for code in _connected_class_codes(n):
            g = graph_from_code(n, code)
            if is_bipartite(g) is None:
                yield g
    else:
        nbits = n * (n - 1) // 2
        total = 1 << nbits
        chunk = 1 << min(nbits, _CHUNK_BITS)
        for start in range(0, total, chunk):
            codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
            for code in codes[_connected_mask(codes, n)]:
                g = graph_from_code(n, int(code))
                if is_bipartite(g) is None:
                    yield g
