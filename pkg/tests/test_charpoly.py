"""
Tests for exact characteristic polynomials, b-sequences and the quasi-order.
sympy's determinant of xI - A is the oracle.
"""

import numpy as np
import pytest
import sympy

from src.algebra.charpoly import (
    b_coeffs,
    char_poly,
    coalescence_identity_sides,
    compare_sequences,
    edge_recursion_sides,
    quasi_compare,
    verify_coalescence_identity,
    verify_disjoint_union,
    verify_edge_recursion,
)
from src.algebra.polynomial import IntPolynomial
from src.errors import GuardExceededError, NotBipartiteError
from src.graphs.core import Graph, complete_graph, cycle_graph, disjoint_union, path_graph, relabel, star_graph
from src.graphs.generators import random_bipartite, random_graph, random_tree
from src.models.schemas import QuasiOrder
from src.spectral.eigen import eigen_sym


def sympy_char_poly(g: Graph) -> tuple:
    """Ascending coefficients of det(xI - A) computed by sympy."""
    x = sympy.symbols("x")
    a = sympy.Matrix(g.adjacency_matrix().astype(int).tolist())
    coeffs = a.charpoly(x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


class TestIntPolynomial:
    """Tests for exact polynomial arithmetic."""

    def test_trims_leading_zeros(self):
        assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPolynomial((0, 0)).is_zero()
        assert IntPolynomial(()).degree == -1
        assert str(IntPolynomial(())) == "0"

    def test_arithmetic(self):
        x1 = IntPolynomial((1, 1))
        assert (x1 * x1).coeffs == (1, 2, 1)
        assert (x1 ** 3).coeffs == (1, 3, 3, 1)
        assert (x1 - x1).is_zero()
        assert (x1 * 3).coeffs == (3, 3)
        assert (2 * x1).coeffs == (2, 2)
        assert x1.shift(2).coeffs == (0, 0, 1, 1)

    def test_valuation(self):
        p = IntPolynomial((0, 0, -3, 1))
        assert p.valuation() == 2
        assert p.lowest_coefficient() == -3
        with pytest.raises(ValueError):
            IntPolynomial(()).valuation()

    def test_evaluation(self):
        p = IntPolynomial((1, 0, -3, 0, 1))
        assert p(2) == 16 - 12 + 1
        assert p.evaluate(1j) == pytest.approx(1 + 3 + 1)


class TestCharPoly:
    """Tests for Faddeev-LeVerrier against known values and sympy."""

    def test_k2(self):
        phi = char_poly(path_graph(2))
        assert phi.coeffs == (-1, 0, 1)
        assert str(phi) == "-1 0 1"
        assert str(b_coeffs(path_graph(2))) == "1 1"

    def test_p4(self):
        assert char_poly(path_graph(4)).coeffs == (1, 0, -3, 0, 1)
        assert b_coeffs(path_graph(4)).values == (1, 3, 1)

    def test_triangle(self):
        assert char_poly(complete_graph(3)).coeffs == (-2, -3, 0, 1)
        with pytest.raises(NotBipartiteError):
            b_coeffs(complete_graph(3))

    def test_degenerate_orders(self):
        assert char_poly(Graph.empty(0)).coeffs == (1,)
        assert char_poly(Graph.empty(3)).coeffs == (0, 0, 0, 1)
        assert b_coeffs(Graph.empty(3)).values == (1, 0)

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_sympy_on_random_graphs(self, seed):
        g = random_graph(7, 0.5, seed)
        assert char_poly(g).coeffs == sympy_char_poly(g)

    def test_matches_sympy_on_cycles(self):
        for n in (3, 4, 5, 6):
            assert char_poly(cycle_graph(n)).coeffs == sympy_char_poly(cycle_graph(n))

    def test_b_sequence_counts_matchings_of_a_tree(self):
        # b_2 of a tree is its number of edges
        t = random_tree(10, 3)
        b = b_coeffs(t)
        assert b.values[0] == 1
        assert b.values[1] == t.m


class TestCharPolyInvariants:
    """Relabelling and agreement with the numeric spectrum."""

    @pytest.mark.parametrize("seed", range(10))
    def test_relabel_invariance(self, seed):
        g = random_graph(9, 0.4, seed)
        perm = np.random.default_rng(seed).permutation(g.n).tolist()
        assert char_poly(relabel(g, perm)) == char_poly(g)

    @pytest.mark.parametrize("seed", range(10))
    def test_eigenvalues_are_roots(self, seed):
        g = random_graph(9, 0.4, seed)
        phi = char_poly(g)
        for lam in eigen_sym(g).eigenvalues:
            assert abs(phi.evaluate(float(lam))) <= 1e-6 * (1 + abs(lam)) ** g.n

    def test_eigenvalues_are_roots_on_a_tree(self):
        t = random_tree(12, 5)
        phi = char_poly(t)
        for lam in eigen_sym(t).eigenvalues:
            assert abs(phi.evaluate(float(lam))) <= 1e-6 * (1 + abs(lam)) ** t.n


class TestQuasiOrder:
    """Tests for coefficient-wise b-sequence comparison."""

    def test_padding(self):
        assert compare_sequences((1, 2), (1, 2, 0)) == QuasiOrder.EQUAL
        assert compare_sequences((1, 2), (1, 2, 1)) == QuasiOrder.LESS
        assert compare_sequences((1, 3, 1), (1, 2)) == QuasiOrder.GREATER
        assert compare_sequences((1, 3), (1, 2, 1)) == QuasiOrder.INCOMPARABLE

    def test_path_above_two_edges(self):
        two_edges, _ = disjoint_union(path_graph(2), path_graph(2))
        assert quasi_compare(path_graph(4), two_edges) == QuasiOrder.GREATER
        assert quasi_compare(two_edges, path_graph(4)) == QuasiOrder.LESS

    def test_star_against_path(self):
        # S4 has b = (1, 3), P4 has b = (1, 3, 1)
        assert quasi_compare(star_graph(4), path_graph(4)) == QuasiOrder.LESS


class TestIdentities:
    """Tests for the exact polynomial identities."""

    @pytest.mark.parametrize("seed", range(10))
    def test_coalescence_identity(self, seed):
        g = random_tree(6, seed)
        h = random_bipartite(2, 3, 0.5, seed)
        assert verify_coalescence_identity(g, seed % 6, h, seed % 5)

    def test_coalescence_identity_non_bipartite(self):
        lhs, rhs = coalescence_identity_sides(complete_graph(3), 0, cycle_graph(5), 2)
        assert lhs == rhs

    @pytest.mark.parametrize("g", [
        cycle_graph(4),
        cycle_graph(6),
        Graph.from_pairs(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
        complete_graph(4),
        path_graph(5),
    ])
    def test_edge_recursion(self, g):
        for e in g.sorted_edges():
            assert verify_edge_recursion(g, e)

    def test_edge_recursion_guard(self):
        with pytest.raises(GuardExceededError):
            edge_recursion_sides(cycle_graph(6), (0, 1), max_order=5)

    def test_disjoint_union(self):
        assert verify_disjoint_union(cycle_graph(5), star_graph(4))
