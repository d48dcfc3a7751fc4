# Eigendecomposition, vertex energy and the Coulson-type quadrature oracle

from .eigen import Spectrum, eigen_sym, jacobi_eigh
from .energy import (
    EigenWeight,
    WeightMatrix,
    graph_energy,
    vertex_energy,
    vertex_energies,
    abs_adjacency,
    weight_matrix,
    aggregate_weights,
    weight_on,
    spectral_moment,
    walk_count,
)
from .coulson import coulson_integrand, coulson_vertex_energy

__all__ = [
    "Spectrum",
    "eigen_sym",
    "jacobi_eigh",
    "EigenWeight",
    "WeightMatrix",
    "graph_energy",
    "vertex_energy",
    "vertex_energies",
    "abs_adjacency",
    "weight_matrix",
    "aggregate_weights",
    "weight_on",
    "spectral_moment",
    "walk_count",
    "coulson_integrand",
    "coulson_vertex_energy",
]
