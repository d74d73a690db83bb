"""Spectral-radius machinery for the antipodal box graph.

Four quantities, ordered λ1 <= CW(sqrt(d)) <= max_i sqrt(sum_{j~i} d_j)
<= sqrt(2|E|) on every graph with an edge:

* λ1 by power iteration (the matrix is symmetric nonnegative, only the top
  eigenvalue is needed);
* the Collatz-Wielandt certificate max_i (Mx)_i / x_i for a positive x,
  evaluated at x_i = sqrt(d_i);
* the Cauchy-Schwarz relaxation of that certificate;
* the trace bound sqrt(tr(M^T M)) = sqrt(2|E|).

Isolated vertices are removed inside each operation (restriction), so the
stored graph stays faithful to the raw discretization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boundary import AntipodalGraph

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 100_000


class NoEdgesError(ValueError):
    """The graph has no edges; every spectral quantity is degenerate."""


class PowerIterationError(RuntimeError):
    """Power iteration failed to converge; carries the last estimate."""

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class BoundChainReport:
    lambda1: float
    cw_bound: float
    sqrt_degree_bound: float
    trace_bound: float
    k_effective: int


def _require_edges(G: AntipodalGraph):
    if G.edge_count < 1:
        raise NoEdgesError("graph has no edges")


def _nonisolated(G: AntipodalGraph) -> np.ndarray:
    return np.nonzero(G.degrees > 0)[0]


def power_iteration(
    G: AntipodalGraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[float, np.ndarray]:
    """Top eigenvalue and Perron iterate of the adjacency matrix.

    Iterates on M + I (standard shift: it preserves the top eigenpair of a
    nonnegative symmetric M while breaking the ±λ1 oscillation of bipartite
    graphs) from the all-ones vector.  Convergence requires both successive
    Rayleigh estimates within tol relative and the eigen-residual
    ||M v - λ v|| <= 10 * tol * λ * ||v||.

    Returns (λ1 estimate, iterate on the full vertex set; isolated vertices
    carry zero).
    """
    _require_edges(G)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    live = _nonisolated(G)
    k_eff = live.size
    # matvec on the full graph: isolated rows stay zero and do not interact
    v = np.zeros(G.k)
    v[live] = 1.0 / math.sqrt(k_eff)
    lam_prev = math.inf
    for _ in range(int(max_iter)):
        w = G.matvec(v) + v
        lam_shift = float(v @ w)  # Rayleigh quotient of M + I (v is unit)
        lam = lam_shift - 1.0
        resid = float(np.linalg.norm(w - lam_shift * v))
        if (
            math.isfinite(lam_prev)
            and abs(lam - lam_prev) < tol * abs(lam)
            and resid <= 10.0 * tol * lam
        ):
            return lam, v
        lam_prev = lam
        v = w / float(np.linalg.norm(w))
    raise PowerIterationError(
        f"no convergence within {max_iter} iterations (last estimate {lam})",
        estimate=lam,
    )


def lambda1(
    G: AntipodalGraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> float:
    """Largest adjacency eigenvalue via power iteration (Rayleigh quotient)."""
    lam, _ = power_iteration(G, tol, max_iter)
    return lam


def collatz_wielandt_bound(G: AntipodalGraph, x: np.ndarray) -> float:
    """max_i (Mx)_i / x_i over non-isolated i, for strictly positive x there.

    For nonnegative M this dominates λ1(M) for every admissible x; the
    package's standard certificate is x_i = sqrt(d_i).
    """
    _require_edges(G)
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (G.k,):
        raise ValueError(f"x must have shape ({G.k},)")
    live = _nonisolated(G)
    if (x[live] <= 0.0).any():
        raise ValueError("x must be strictly positive on non-isolated vertices")
    mx = G.matvec(x)
    return float((mx[live] / x[live]).max())


def sqrt_degree_certificate(G: AntipodalGraph) -> np.ndarray:
    """The vector x with x_i = sqrt(d_i) (zero on isolated vertices)."""
    return np.sqrt(G.degrees.astype(np.float64))


def sqrt_degree_bound(G: AntipodalGraph) -> float:
    """max_i sqrt(sum of degrees over N(i)), non-isolated i only."""
    _require_edges(G)
    live = _nonisolated(G)
    sums = G.matvec(G.degrees.astype(np.float64))
    return float(np.sqrt(sums[live].max()))


def trace_bound(G: AntipodalGraph) -> float:
    """sqrt(2 |E|) = sqrt(tr(M^T M)) for a 0/1 symmetric adjacency."""
    _require_edges(G)
    return math.sqrt(2.0 * G.edge_count)


CHAIN_SLACK = 1e-9


def bound_chain(
    G: AntipodalGraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> BoundChainReport:
    """All four quantities plus the ordering sanity check."""
    _require_edges(G)
    lam = lambda1(G, tol, max_iter)
    cw = collatz_wielandt_bound(G, sqrt_degree_certificate(G))
    sdb = sqrt_degree_bound(G)
    trb = trace_bound(G)
    chain = (lam, cw, sdb, trb)
    for lo, hi in zip(chain, chain[1:]):
        if lo > hi * (1.0 + CHAIN_SLACK):
            raise RuntimeError(f"bound chain ordering violated: {chain}")
    return BoundChainReport(
        lambda1=lam,
        cw_bound=cw,
        sqrt_degree_bound=sdb,
        trace_bound=trb,
        k_effective=int(_nonisolated(G).size),
    )
