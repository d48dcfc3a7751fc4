"""
Exact characteristic polynomials, bipartite b-sequences and the quasi-order.

char_poly runs Faddeev-LeVerrier over Python integers: the adjacency
matrix is integral, so every division by k in the recursion is exact and
is checked as such.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import zip_longest
from typing import Optional, Sequence, Tuple

import numpy as np

from src.algebra.polynomial import IntPolynomial
from src.config import settings
from src.errors import ConsistencyError, GraphError, GuardExceededError, NotBipartiteError
from src.graphs.core import (
    Edge,
    Graph,
    canonical_edge,
    coalesce,
    cycles_through_edge,
    delete_edges,
    delete_vertices,
    disjoint_union,
    is_bipartite,
)
from src.models.schemas import QuasiOrder
from src.utils.cache import get_computation_cache


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BSequence:
    """b_0, b_2, ..., b_{2 floor(n/2)} of a bipartite graph of order n"""
    values: Tuple[int, ...]
    n: int

    def padded(self, length: int) -> Tuple[int, ...]:
        return self.values + (0,) * (length - len(self.values))

    def __str__(self) -> str:
        return " ".join(str(b) for b in self.values)


def _faddeev_leverrier(g: Graph) -> IntPolynomial:
    n = g.n
    if n == 0:
        return IntPolynomial.one()

    neighbours = [list(nb) for nb in g.adjacency]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1

    m = np.zeros((n, n), dtype=object)
    np.fill_diagonal(m, 1)
    for k in range(1, n + 1):
        am = np.zeros((n, n), dtype=object)
        for i, nb in enumerate(neighbours):
            if nb:
                am[i] = m[nb].sum(axis=0)
        trace = sum(am[i, i] for i in range(n))
        c, rem = divmod(-int(trace), k)
        if rem:
            raise ConsistencyError(f"inexact division by {k} in Faddeev-LeVerrier for {g}")
        coeffs[n - k] = c
        for i in range(n):
            am[i, i] += c
        m = am

    # Cayley-Hamilton: the recursion must terminate in the zero matrix
    if any(x != 0 for x in m.flat):
        raise ConsistencyError(f"Faddeev-LeVerrier did not terminate at zero for {g}")
    return IntPolynomial(tuple(coeffs))


def char_poly(g: Graph) -> IntPolynomial:
    """det(xI - A(g)) as an exact monic integer polynomial of degree n."""
    return get_computation_cache().get_or_compute("charpoly", g, lambda: _faddeev_leverrier(g))


def b_coeffs(g: Graph) -> BSequence:
    """|a_{2k}| for a bipartite graph, after checking the alternating sign pattern."""
    if not is_bipartite(g):
        raise NotBipartiteError(f"{g} has an odd cycle")
    phi = char_poly(g)
    n = g.n
    values = []
    for k in range(n + 1):
        a_k = phi.coefficient(n - k)
        if k % 2:
            if a_k != 0:
                raise ConsistencyError(f"odd coefficient a_{k}={a_k} of bipartite {g}")
            continue
        b = a_k if (k // 2) % 2 == 0 else -a_k
        if b < 0:
            raise ConsistencyError(f"a_{k}={a_k} of bipartite {g} breaks the (-1)^k sign pattern")
        values.append(b)
    return BSequence(tuple(values), n)


def compare_sequences(b1: Sequence[int], b2: Sequence[int]) -> QuasiOrder:
    """Coefficient-wise comparison after right-padding the shorter sequence with zeros."""
    less = greater = False
    for x, y in zip_longest(b1, b2, fillvalue=0):
        if x < y:
            less = True
        elif x > y:
            greater = True
    if less and greater:
        return QuasiOrder.INCOMPARABLE
    if less:
        return QuasiOrder.LESS
    if greater:
        return QuasiOrder.GREATER
    return QuasiOrder.EQUAL


def quasi_compare(g1: Graph, g2: Graph) -> QuasiOrder:
    return compare_sequences(b_coeffs(g1).values, b_coeffs(g2).values)


# ================== Exact identities ==================

def coalescence_identity_sides(g: Graph, u: int, h: Graph, v: int) -> Tuple[IntPolynomial, IntPolynomial]:
    """Both sides of phi_{G∘H} = phi_G phi_{H-v} + phi_{G-u} phi_H - x phi_{G-u} phi_{H-v}."""
    lhs = char_poly(coalesce(g, u, h, v).graph)
    phi_g, phi_h = char_poly(g), char_poly(h)
    phi_gu = char_poly(delete_vertices(g, [u]).graph)
    phi_hv = char_poly(delete_vertices(h, [v]).graph)
    rhs = phi_g * phi_hv + phi_gu * phi_h - (phi_gu * phi_hv).shift(1)
    return lhs, rhs


def verify_coalescence_identity(g: Graph, u: int, h: Graph, v: int) -> bool:
    lhs, rhs = coalescence_identity_sides(g, u, h, v)
    if lhs != rhs:
        logger.error(f"Coalescence identity failed for {g}@{u} and {h}@{v}: {lhs} != {rhs}")
    return lhs == rhs


def edge_recursion_sides(
    g: Graph, e: Edge, max_order: Optional[int] = None
) -> Tuple[IntPolynomial, IntPolynomial]:
    """Both sides of phi_G = phi_{G-e} - phi_{G-{u,v}} - 2 sum_C phi_{G-C}."""
    max_order = max_order or settings.cycle_enum_max_order
    if g.n > max_order:
        raise GuardExceededError(f"cycle enumeration limited to n <= {max_order}, got n={g.n}")
    u, v = canonical_edge(*e)
    if (u, v) not in g.edges:
        raise GraphError(f"edge {(u, v)} not in graph")

    rhs = char_poly(delete_edges(g, [(u, v)])) - char_poly(delete_vertices(g, [u, v]).graph)
    for cycle in cycles_through_edge(g, (u, v)):
        rhs = rhs - char_poly(delete_vertices(g, cycle).graph) * 2
    return char_poly(g), rhs


def verify_edge_recursion(g: Graph, e: Edge, max_order: Optional[int] = None) -> bool:
    lhs, rhs = edge_recursion_sides(g, e, max_order)
    if lhs != rhs:
        logger.error(f"Edge recursion failed for {g} at {e}: {lhs} != {rhs}")
    return lhs == rhs


def verify_disjoint_union(g: Graph, h: Graph) -> bool:
    union, _ = disjoint_union(g, h)
    return char_poly(union) == char_poly(g) * char_poly(h)
