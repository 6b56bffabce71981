"""Weighted adjacency matrices A_f(G) and dense symmetric eigensolves."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .graphs import Graph
from .weights import WeightFunction, evaluate, evaluate_exact


class SpectralError(RuntimeError):
    """Eigensolve failed to converge or produced inconsistent output."""


@dataclass(frozen=True)
class WeightedMatrix:
    """Dense symmetric A_f(G) with its provenance."""

    entries: np.ndarray
    graph: Graph
    weight: WeightFunction

    @property
    def n(self) -> int:
        return self.graph.n


def build_matrix(g: Graph, f: WeightFunction) -> WeightedMatrix:
    """A_f(G): entry (i,j) is f(d_i,d_j) on edges, 0 elsewhere."""
    deg = g.degrees()
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        w = evaluate(f, deg[u], deg[v])
        a[u, v] = w
        a[v, u] = w
    a.setflags(write=False)
    return WeightedMatrix(a, g, f)


def build_matrix_exact(g: Graph, f: WeightFunction) -> Optional[list[list[Fraction]]]:
    """A_f(G) with Fraction entries, or None when f is irrational on degrees."""
    deg = g.degrees()
    a = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        w = evaluate_exact(f, deg[u], deg[v])
        if w is None:
            return None
        a[u][v] = w
        a[v][u] = w
    return a


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    perron: np.ndarray
    residual: float
    spectrum: Optional[np.ndarray] = None
    method: str = "dense_symmetric"


def _as_array(m) -> np.ndarray:
    if isinstance(m, WeightedMatrix):
        return m.entries
    return np.asarray(m, dtype=float)


def spectral_radius(m, tol: float = 1e-10, with_spectrum: bool = False) -> SpectralResult:
    """Spectral radius and Perron vector of a symmetric matrix.

    The Perron vector is unit 2-norm with its first nonzero component
    positive.  A residual larger than tol * max(1, rho) raises SpectralError
    rather than returning a silently wrong answer.
    """
    a = _as_array(m)
    n = a.shape[0]
    if a.shape != (n, n):
        raise SpectralError(f"matrix is not square: {a.shape}")
    if n == 0 or not a.any():
        # edgeless (includes the degenerate n=1 graph): rho = 0 by convention
        perron = np.zeros(n)
        if n:
            perron[0] = 1.0
        return SpectralResult(0.0, perron, 0.0, np.zeros(n) if with_spectrum else None)
    if not np.array_equal(a, a.T):
        raise SpectralError("matrix is not symmetric")
    try:
        vals, vecs = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"symmetric eigensolver did not converge: {exc}") from exc
    rho = float(max(vals[-1], -vals[0]))
    # bipartite spectra tie at +-rho up to roundoff; the Perron vector always
    # belongs to the top eigenvalue, so prefer it unless the bottom one
    # genuinely dominates (possible only with negative entries)
    if vals[-1] >= -vals[0] - 1e-9 * max(1.0, rho):
        k = len(vals) - 1
    else:
        k = 0
    v = vecs[:, k]
    nz = np.flatnonzero(np.abs(v) > 1e-12)
    if nz.size and v[nz[0]] < 0:
        v = -v
    residual = float(np.max(np.abs(a @ v - vals[k] * v)))
    if residual > tol * max(1.0, rho):
        raise SpectralError(
            f"residual {residual:.3e} exceeds tolerance {tol:.1e} at rho={rho:.6g}"
        )
    return SpectralResult(rho, v, residual, vals if with_spectrum else None)


def full_spectrum(m) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending."""
    a = _as_array(m)
    if a.shape[0] == 0:
        return np.zeros(0)
    if not np.array_equal(a, a.T):
        raise SpectralError("matrix is not symmetric")
    try:
        return np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"symmetric eigensolver did not converge: {exc}") from exc


def rho_f(g: Graph, f: WeightFunction) -> float:
    """Convenience: spectral radius of A_f(G)."""
    return spectral_radius(build_matrix(g, f)).rho


def matrix_rho(m) -> float:
    """Largest eigenvalue of a general real square matrix with real spectrum.

    Used for (possibly non-symmetric) quotient matrices; complains if the
    dominant eigenvalue has a non-negligible imaginary part.
    """
    a = np.asarray(m, dtype=float)
    if a.size == 0:
        return 0.0
    vals = np.linalg.eigvals(a)
    k = int(np.argmax(vals.real))
    lam = vals[k]
    if abs(lam.imag) > 1e-9 * max(1.0, abs(lam.real)):
        raise SpectralError(f"dominant eigenvalue is not real: {lam}")
    return float(lam.real)
