"""Q-index, Perron vector, eta bound, and Rayleigh-quotient deltas.

q(G) is the largest eigenvalue of Q(G) = D(G) + A(G). Q is symmetric
positive semidefinite and, for a connected graph, entrywise nonnegative
and irreducible, so power iteration from the all-ones vector converges to
the (simple) Perron pair. Since Q is symmetric, the residual norm
||Qx - qx|| bounds the eigenvalue error directly, which is what the
comparison logic leans on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, EtaUndefinedError
from .graphs import Graph, bits

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 2_000_000


@dataclass(frozen=True)
class SpectralResult:
    q: float
    vector: np.ndarray  # unit 2-norm; positive iff connected
    residual: float
    iterations: int
    connected: bool = True


def q_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u in range(g.n):
        for v in bits(g.adj[u]):
            a[u, v] = 1.0
    return a + np.diag(a.sum(axis=1))


def _power_iteration(mat: np.ndarray, tol: float) -> tuple[float, np.ndarray, float, int]:
    n = mat.shape[0]
    if n == 1:
        return float(mat[0, 0]), np.ones(1), 0.0, 0
    x = np.ones(n) / np.sqrt(n)
    q = 0.0
    res = np.inf
    for it in range(1, MAX_ITERATIONS + 1):
        y = mat @ x
        q = float(x @ y)
        res = float(np.linalg.norm(y - q * x))
        if res <= tol:
            return q, x, res, it
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            # zero matrix row space; the all-zeros spectrum
            return 0.0, x, 0.0, it
        x = y / norm
    raise ConvergenceError(
        f"power iteration stalled at residual {res:.3e} (tol {tol:.1e})",
        best=SpectralResult(q, x, res, MAX_ITERATIONS),
    )


@lru_cache(maxsize=1 << 18)
def _q_index_cached(g: Graph, tol: float) -> SpectralResult:
    comps = g.components()
    if len(comps) == 1:
        q, x, res, it = _power_iteration(q_matrix(g), tol)
        return SpectralResult(q, x, res, it, connected=True)
    best = None
    best_mask = 0
    total_it = 0
    for mask in comps:
        sub = g.induced(bits(mask))
        q, x, res, it = _power_iteration(q_matrix(sub), tol)
        total_it += it
        if best is None or q > best[0]:
            best = (q, x, res)
            best_mask = mask
    assert best is not None
    full = np.zeros(g.n)
    for i, v in enumerate(bits(best_mask)):
        full[v] = best[1][i]
    return SpectralResult(best[0], full, best[2], total_it, connected=False)


def q_index(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Perron root and unit eigenvector of Q(g).

    For a disconnected graph the result is the maximum over components,
    with the vector supported on an extremal component and the result
    flagged via `connected=False`.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    return _q_index_cached(g, tol)


def eta(g: Graph, u: int) -> float:
    """d(u) + (sum of neighbor degrees)/d(u), evaluated in exact arithmetic."""
    d = g.degree(u)
    if d == 0:
        raise EtaUndefinedError(f"vertex {u} is isolated")
    total = sum(g.degree(v) for v in bits(g.adj[u]))
    return float(Fraction(d * d + total, d))


def eta_exact(g: Graph, u: int) -> Fraction:
    d = g.degree(u)
    if d == 0:
        raise EtaUndefinedError(f"vertex {u} is isolated")
    total = sum(g.degree(v) for v in bits(g.adj[u]))
    return Fraction(d * d + total, d)


def eta_max(g: Graph) -> float:
    return float(max(eta_exact(g, u) for u in range(g.n)))


def rayleigh_delta(x, removed, added) -> float:
    """x^T (Q(after) - Q(before)) x for an edge rewrite."""
    x = np.asarray(x, dtype=float)
    gain = sum((x[a] + x[b]) ** 2 for a, b in added)
    loss = sum((x[a] + x[b]) ** 2 for a, b in removed)
    return float(gain - loss)


class Ordering(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    INDISTINGUISHABLE = "indistinguishable"


def q_compare(g1: Graph, g2: Graph, sep: float = 1e-9) -> Ordering:
    """Certified comparison of q(g1) vs q(g2).

    Returns GREATER/LESS only when the gap exceeds `sep` after both
    solves converge; close calls are re-run at a 100x finer tolerance and,
    if still within `sep`, reported INDISTINGUISHABLE rather than forced.
    """
    if sep < 0:
        raise ValueError("sep must be nonnegative")
    for tol in (sep / 10 or DEFAULT_TOL, sep / 1000 or DEFAULT_TOL):
        q1 = q_index(g1, tol).q
        q2 = q_index(g2, tol).q
        if abs(q1 - q2) > sep:
            return Ordering.GREATER if q1 > q2 else Ordering.LESS
    return Ordering.INDISTINGUISHABLE
