"""
Tests for the H_(n,d) star-chain family and its closed forms.
"""

import math

import networkx as nx
import pytest

from src.algebra.charpoly import char_poly
from src.errors import GraphError
from src.graphs.core import is_tree, path_graph
from src.spectral.energy import vertex_energies
from src.theorems.hnd import (
    HND_U,
    HND_V,
    build_star_chain,
    check_hnd_domination,
    hnd_build,
    hnd_char_poly,
    hnd_energy_u,
    hnd_quartic_roots,
    hnd_verify,
    hnd_weights,
    series_bound_check,
)


class TestHndConstruction:
    """Tests for building H_(n,d)."""

    def test_smallest_is_p4(self):
        inst = hnd_build(1, 1)
        assert inst.order == 4
        assert nx.is_isomorphic(inst.graph.nx_graph, path_graph(4).nx_graph)
        assert inst.graph.degree(HND_U) == 1

    def test_order_and_degrees(self):
        inst = hnd_build(3, 2)
        assert inst.graph.n == 2 + 3 * 3
        assert is_tree(inst.graph)
        assert inst.graph.degree(HND_V) == 1 + 3
        assert inst.graph.degree(HND_U) == 1

    def test_invalid_parameters(self):
        with pytest.raises(GraphError):
            hnd_build(0, 2)
        with pytest.raises(GraphError):
            hnd_build(2, 0)
        with pytest.raises(GraphError):
            build_star_chain([1, 0])

    def test_chain_with_varying_degrees(self):
        g = build_star_chain([1, 3, 2])
        assert g.n == 2 + 2 + 4 + 3
        assert g.degree(HND_V) == 4


class TestHndClosedForms:
    """Closed forms against the built graphs."""

    def test_p4_polynomial_and_energy(self):
        assert hnd_char_poly(1, 1).coeffs == (1, 0, -3, 0, 1)
        assert hnd_energy_u(1, 1) == pytest.approx(2 / math.sqrt(5), abs=1e-12)

    def test_weights_sum_to_one(self):
        for n in range(1, 6):
            for d in range(1, 6):
                p_big, p_small = hnd_weights(n, d)
                assert 2 * p_big + 2 * p_small == pytest.approx(1.0)
                big, small = hnd_quartic_roots(n, d)
                assert big * small == pytest.approx(d)
                assert big + small == pytest.approx(n + d + 1)

    def test_energy_formula_matches_weights(self):
        for n, d in [(1, 1), (2, 3), (5, 2), (8, 5)]:
            big, small = hnd_quartic_roots(n, d)
            p_big, p_small = hnd_weights(n, d)
            from_weights = 2 * p_big * math.sqrt(big) + 2 * p_small * math.sqrt(small)
            assert hnd_energy_u(n, d) == pytest.approx(from_weights, abs=1e-12)

    @pytest.mark.parametrize("n,d", [(1, 1), (2, 1), (3, 2), (2, 4), (4, 3)])
    def test_verify(self, n, d):
        inst = hnd_build(n, d)
        assert char_poly(inst.graph) == hnd_char_poly(n, d)
        report = hnd_verify(inst)
        assert report.passed
        assert report.indeterminate == 0

    def test_energy_of_u_from_spectrum(self):
        inst = hnd_build(3, 2)
        assert vertex_energies(inst.graph)[HND_U] == pytest.approx(hnd_energy_u(3, 2), abs=1e-8)


class TestStarChains:
    """Tests for series bounds and domination by H_(n, max d)."""

    def test_series_bound(self):
        report = series_bound_check([1, 2, 3, 4, 5])
        assert report.passed
        assert report.checked == 6

    def test_series_bound_invalid(self):
        with pytest.raises(GraphError):
            series_bound_check([])
        with pytest.raises(GraphError):
            series_bound_check([2, -1])

    def test_constant_degrees_match_hnd(self):
        report = check_hnd_domination([3, 3, 3])
        assert report.passed
        assert [r.check for r in report.items] == ["hnd-domination-v", "hnd-domination-u"]

    @pytest.mark.parametrize("d_seq", [[1, 3], [2, 1, 4], [5, 1, 1, 2]])
    def test_varying_degrees_dominated(self, d_seq):
        report = check_hnd_domination(d_seq)
        assert report.passed
        assert report.indeterminate == 0
