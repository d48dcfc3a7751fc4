# Exact characteristic polynomials and the bipartite quasi-order

from .polynomial import IntPolynomial
from .charpoly import (
    BSequence,
    char_poly,
    b_coeffs,
    compare_sequences,
    quasi_compare,
    coalescence_identity_sides,
    verify_coalescence_identity,
    edge_recursion_sides,
    verify_edge_recursion,
    verify_disjoint_union,
)

__all__ = [
    "IntPolynomial",
    "BSequence",
    "char_poly",
    "b_coeffs",
    "compare_sequences",
    "quasi_compare",
    "coalescence_identity_sides",
    "verify_coalescence_identity",
    "edge_recursion_sides",
    "verify_edge_recursion",
    "verify_disjoint_union",
]
