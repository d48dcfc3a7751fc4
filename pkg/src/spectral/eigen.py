"""
Symmetric eigendecomposition of adjacency matrices.

Small matrices go through cyclic Jacobi rotations in a fixed sweep order;
larger ones through LAPACK eigh. Both routes share the same ordering and
sign normalisation, so a Spectrum is reproducible for identical input.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.config import settings
from src.errors import ConsistencyError, ConvergenceError
from src.graphs.core import Graph
from src.monitoring.metrics import record_eigensolve
from src.utils.cache import get_computation_cache


logger = logging.getLogger(__name__)

_SIGN_THRESHOLD = 1e-10


@dataclass(frozen=True, eq=False)
class Spectrum:
    """eigenvalues[j] (descending) with unit eigenvector eigenvectors[:, j]"""
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def residuals(self, a: np.ndarray) -> Tuple[float, float]:
        """(max column residual ||A u_j - l_j u_j||, max |U^T U - I|)."""
        if self.n == 0:
            return 0.0, 0.0
        u = self.eigenvectors
        col = np.linalg.norm(a @ u - u * self.eigenvalues, axis=0).max()
        ortho = np.abs(u.T @ u - np.eye(self.n)).max()
        return float(col), float(ortho)


def jacobi_eigh(a: np.ndarray, tol: float, max_sweeps: int) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    Cyclic Jacobi on a symmetric matrix.

    Returns unsorted eigenvalues, the accumulated rotation matrix and the
    number of sweeps used. Stops once the off-diagonal Frobenius norm drops
    to tol * max(1, ||A||_F).
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(a)))
    # entries this small cannot keep the off-norm above the stopping threshold
    skip = 0.1 * tol * scale / max(1, n)

    for sweep in range(max_sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= tol * scale:
            return np.diag(a).copy(), v, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq

    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e})")


def _normalise(values: np.ndarray, vectors: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Descending order; first entry above threshold of each eigenvector positive."""
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = vectors[:, order].copy()
    for j in range(vectors.shape[1]):
        nz = np.flatnonzero(np.abs(vectors[:, j]) > _SIGN_THRESHOLD)
        if nz.size and vectors[nz[0], j] < 0:
            vectors[:, j] = -vectors[:, j]
    return values, vectors


def _decompose(g: Graph, backend: str) -> Spectrum:
    a = g.adjacency_matrix()
    if g.n == 0:
        return Spectrum(np.zeros(0), np.zeros((0, 0)))

    if backend == "jacobi":
        values, vectors, sweeps = jacobi_eigh(a, settings.jacobi_tol, settings.jacobi_max_sweeps)
        logger.debug(f"Jacobi converged for {g} in {sweeps} sweeps")
    else:
        values, vectors = np.linalg.eigh(a)
    record_eigensolve(backend)

    values, vectors = _normalise(values, vectors)
    spectrum = Spectrum(values, vectors)

    col, ortho = spectrum.residuals(a)
    if col > 1e-9 * max(1, g.n) or ortho > 1e-9:
        raise ConsistencyError(f"eigendecomposition of {g} off: residual {col:.2e}, orthogonality {ortho:.2e}")
    return spectrum


def eigen_sym(g: Graph, backend: Optional[str] = None) -> Spectrum:
    """
    Spectrum of A(g).

    backend: "jacobi", "lapack" or None to pick by settings.jacobi_max_order.
    """
    if backend is None:
        backend = "jacobi" if g.n <= settings.jacobi_max_order else "lapack"
    if backend not in ("jacobi", "lapack"):
        raise ValueError(f"unknown eigensolver backend {backend!r}")
    return get_computation_cache().get_or_compute(f"spectrum:{backend}", g, lambda: _decompose(g, backend))
