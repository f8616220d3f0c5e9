"""Matrix spectral radii for base graphs, plus the limit-point sequences.

rho(A(G)) and rho(Q(G)) for connected G are computed with the same bracketed
power iteration contract as the tensor routine (diagonal shift 1, max-norm
normalization, two-sided Collatz-Wielandt bounds), which keeps the matrix
and tensor sides directly comparable.

The second half of the module tracks the classical limit point
sqrt(2 + sqrt(5)) = tau^{3/2}, tau the golden ratio: beta_n is the positive
root of P_n(x) = x^{n+1} - (1 + x + ... + x^{n-1}) in (1, 2] and
alpha_n = beta_n^{1/2} + beta_n^{-1/2} climbs strictly to the threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constructions import cycle_plus_pendant
from .core import SimpleGraph, is_connected

__all__ = [
    "adjacency_matrix",
    "signless_laplacian_matrix",
    "rho_adjacency_matrix",
    "rho_signless_laplacian_matrix",
    "beta_n",
    "alpha_n",
    "tau_threshold",
    "LimitPointTable",
    "limit_point_table",
    "pendant_cycle_rho_sequence",
]

# Past this index consecutive beta_n are closer than double precision can
# resolve, so "strictly increasing" stops being checkable.
_MAX_LIMIT_INDEX = 64


def adjacency_matrix(g: SimpleGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def signless_laplacian_matrix(g: SimpleGraph) -> np.ndarray:
    a = adjacency_matrix(g)
    return a + np.diag(a.sum(axis=1))


def _bracketed_power_iteration(
    m: np.ndarray, tol: float, max_iter: int
) -> tuple[float, np.ndarray]:
    """Spectral radius and max-normalized positive eigenvector of a
    nonnegative irreducible matrix, via power iteration on m + I."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = m.shape[0]
    x = np.ones(n)
    for _ in range(max_iter):
        y = m @ x + x
        s = y / x
        lower = float(s.min())
        upper = float(s.max())
        if upper - lower <= tol * upper:
            return 0.5 * (lower + upper) - 1.0, x
        x = y / y.max()
    raise RuntimeError(f"power iteration did not converge in {max_iter} steps")


def rho_adjacency_matrix(
    g: SimpleGraph, tol: float = 1e-10, max_iter: int = 1_000_000
) -> tuple[float, np.ndarray]:
    """(rho(A(g)), positive eigenvector with max entry 1); g must be connected."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    return _bracketed_power_iteration(adjacency_matrix(g), tol, max_iter)


def rho_signless_laplacian_matrix(
    g: SimpleGraph, tol: float = 1e-10, max_iter: int = 1_000_000
) -> tuple[float, np.ndarray]:
    """(rho(D + A of g), positive eigenvector with max entry 1); g connected."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    return _bracketed_power_iteration(signless_laplacian_matrix(g), tol, max_iter)


def beta_n(n: int, tol: float = 1e-12) -> float:
    """Positive root of P_n(x) = x^{n+1} - (1 + x + ... + x^{n-1}) in (1, 2].

    For n = 1 the root is exactly 1. For larger n, bisection runs on the
    rescaled form (x - 1) P_n(x) / x^n = (x^2 - x - 1) + x^{-n}, whose slope
    stays O(1) near the root, and continues past tol down to machine
    precision since steps are cheap.
    """
    if n < 1:
        raise ValueError("index must be at least 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if n == 1:
        return 1.0

    def f(x: float) -> float:
        return (x * x - x - 1.0) + x ** (-n)

    lo, hi = 1.0, 2.0  # P_n(1) = 1 - n < 0 and P_n(2) = 2^n + 1 > 0
    while hi - lo > min(tol, 1e-15):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        val = f(mid)
        if val == 0.0:
            return mid
        if val < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def alpha_n(n: int, tol: float = 1e-12) -> float:
    """alpha_n = beta_n^{1/2} + beta_n^{-1/2}; alpha_1 = 2 exactly."""
    root = math.sqrt(beta_n(n, tol))
    return root + 1.0 / root


def tau_threshold() -> float:
    """sqrt(2 + sqrt(5)), the strict upper limit of the alpha_n."""
    return math.sqrt(2.0 + math.sqrt(5.0))


@dataclass(frozen=True)
class LimitPointTable:
    """Rows (n, beta_n, alpha_n) for n = 1..n_max, with the limit threshold."""

    rows: tuple[tuple[int, float, float], ...]
    threshold: float


def limit_point_table(n_max: int, tol: float = 1e-12) -> LimitPointTable:
    """Tabulate beta_n and alpha_n up to n_max (capped at 64, past which
    consecutive values collide in double precision)."""
    if not 1 <= n_max <= _MAX_LIMIT_INDEX:
        raise ValueError(f"n_max must be in 1..{_MAX_LIMIT_INDEX}")
    threshold = tau_threshold()
    rows = []
    for n in range(1, n_max + 1):
        b = beta_n(n, tol)
        a = alpha_n(n, tol)
        rows.append((n, b, a))
    return LimitPointTable(tuple(rows), threshold)


def pendant_cycle_rho_sequence(
    n_max: int, tol: float = 1e-10, max_iter: int = 1_000_000
) -> list[tuple[int, float]]:
    """(n, rho(A(C_{2n+1} + pendant edge))) for n = 1..n_max.

    The base graph is cycle_plus_pendant(2n + 2): an odd cycle of length
    2n+1 with one pendant vertex. The sequence decreases strictly toward
    sqrt(2 + sqrt(5)) from above.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    out = []
    for n in range(1, n_max + 1):
        g = cycle_plus_pendant(2 * n + 2)
        rho, _ = rho_adjacency_matrix(g, tol=tol, max_iter=max_iter)
        out.append((n, rho))
    return out
