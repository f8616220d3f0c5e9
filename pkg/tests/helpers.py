"""Independent oracles the tests check library routines against.

These deliberately avoid the code paths under test: parity searches scan
all 2^n splits, spectral radii come from numpy's dense symmetric solver.
"""

from __future__ import annotations

import numpy as np

from hypergraph_spectra import Hypergraph, SimpleGraph


def brute_odd_bipartite(h: Hypergraph) -> bool:
    """Exhaustive search for a split meeting every edge oddly on both sides."""
    assert h.k % 2 == 0
    masks = [sum(1 << v for v in e) for e in h.edges]
    for x in range(1 << h.n):
        for m in masks:
            if (x & m).bit_count() % 2 == 0:
                break
        else:
            return True
    return False


def eig_rho_adjacency(g: SimpleGraph) -> float:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return float(np.max(np.abs(np.linalg.eigvalsh(a))))


def eig_rho_signless(g: SimpleGraph) -> float:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    q = a + np.diag(a.sum(axis=1))
    return float(np.max(np.linalg.eigvalsh(q)))
