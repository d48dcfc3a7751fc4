"""
Graph energy, vertex energy and the doubly stochastic weight matrix.

The energy of vertex i is the i-th diagonal entry of |A| = U |L| U^T,
which is also the weighted sum sum_j p_ij |l_j| with p_ij = u_ij^2. Both
routes are computed and compared so that a broken eigendecomposition
cannot silently produce plausible energies.
"""
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional

import numpy as np

from src.config import settings
from src.errors import ConsistencyError, GuardExceededError
from src.graphs.core import Graph
from src.spectral.eigen import eigen_sym


logger = logging.getLogger(__name__)

_CROSS_CHECK_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class WeightMatrix:
    """p[i, j] = u_ij^2, the share of eigenvector j carried by vertex i"""
    p: np.ndarray

    def row_sums(self) -> np.ndarray:
        return self.p.sum(axis=1)

    def column_sums(self) -> np.ndarray:
        return self.p.sum(axis=0)

    def is_doubly_stochastic(self, tol: float = 1e-9) -> bool:
        if self.p.size == 0:
            return True
        return bool(
            np.all(self.p >= 0)
            and np.abs(self.row_sums() - 1).max() <= tol
            and np.abs(self.column_sums() - 1).max() <= tol
        )


class EigenWeight(NamedTuple):
    """Summed weight of one vertex on a cluster of (numerically) equal eigenvalues"""
    eigenvalue: float
    multiplicity: int
    weight: float


def graph_energy(g: Graph) -> float:
    """E(G) = sum of |eigenvalues|."""
    return float(np.abs(eigen_sym(g).eigenvalues).sum())


def weight_matrix(g: Graph) -> WeightMatrix:
    u = eigen_sym(g).eigenvectors
    return WeightMatrix(u * u)


def abs_adjacency(g: Graph) -> np.ndarray:
    """|A(G)| = U diag(|l|) U^T."""
    spectrum = eigen_sym(g)
    u = spectrum.eigenvectors
    return (u * np.abs(spectrum.eigenvalues)) @ u.T


def vertex_energies(g: Graph) -> np.ndarray:
    """Energies of all vertices, cross-checked against the diagonal of |A|."""
    if g.n == 0:
        return np.zeros(0)
    spectrum = eigen_sym(g)
    p = weight_matrix(g).p
    energies = p @ np.abs(spectrum.eigenvalues)
    diagonal = np.diag(abs_adjacency(g))
    gap = float(np.abs(energies - diagonal).max())
    if gap > _CROSS_CHECK_TOL:
        raise ConsistencyError(f"weighted eigenvalue sum and |A| diagonal differ by {gap:.3e} on {g}")
    # clamp rounding noise around isolated vertices
    return np.maximum(energies, 0.0)


def vertex_energy(g: Graph, i: int) -> float:
    g.check_vertex(i)
    return float(vertex_energies(g)[i])


def aggregate_weights(g: Graph, i: int, tol: Optional[float] = None) -> List[EigenWeight]:
    """
    Weights of vertex i summed over each eigenspace, in descending eigenvalue order.

    Within a repeated eigenvalue individual p_ij depend on the chosen basis,
    the sums do not.
    """
    g.check_vertex(i)
    tol = tol or settings.eigen_cluster_tol
    spectrum = eigen_sym(g)
    p_row = weight_matrix(g).p[i]

    clusters: List[EigenWeight] = []
    members: List[int] = []
    for j, lam in enumerate(spectrum.eigenvalues):
        if members and abs(spectrum.eigenvalues[members[-1]] - lam) > tol:
            clusters.append(_cluster(spectrum.eigenvalues, p_row, members))
            members = []
        members.append(j)
    if members:
        clusters.append(_cluster(spectrum.eigenvalues, p_row, members))
    return clusters


def _cluster(values: np.ndarray, p_row: np.ndarray, members: List[int]) -> EigenWeight:
    return EigenWeight(
        eigenvalue=float(values[members].mean()),
        multiplicity=len(members),
        weight=float(p_row[members].sum()),
    )


def weight_on(clusters: List[EigenWeight], eigenvalue: float, tol: Optional[float] = None) -> float:
    """Total weight on clusters within tol of eigenvalue (0 when absent)."""
    tol = tol or settings.eigen_cluster_tol
    return sum(c.weight for c in clusters if abs(c.eigenvalue - eigenvalue) <= tol)


def spectral_moment(g: Graph, i: int, k: int) -> float:
    """M_k(G, i) = sum_j p_ij l_j^k."""
    g.check_vertex(i)
    if k < 0:
        raise ValueError(f"moment order must be non-negative, got {k}")
    spectrum = eigen_sym(g)
    return float(weight_matrix(g).p[i] @ spectrum.eigenvalues ** k)


def walk_count(g: Graph, i: int, k: int, max_power: Optional[int] = None) -> int:
    """Closed walks of length k at vertex i, (A^k)_ii, in exact integer arithmetic."""
    g.check_vertex(i)
    max_power = max_power or settings.walk_max_power
    if k < 0:
        raise ValueError(f"walk length must be non-negative, got {k}")
    if k > max_power:
        raise GuardExceededError(f"walk length {k} exceeds guard {max_power}")

    counts = [0] * g.n
    counts[i] = 1
    for _ in range(k):
        counts = [sum(counts[j] for j in nb) for nb in g.adjacency]
    return counts[i]
