"""
Tests for the theorem checks on worked examples and small random instances.
"""

import math

import pytest

from src.errors import GraphError, NotATreeError, NotBipartiteError
from src.graphs.core import Graph, complete_graph, cycle_graph, path_graph, star_graph, tree_path
from src.graphs.generators import random_bipartite, random_tree
from src.models.schemas import CheckStatus, Verdict
from src.spectral.energy import vertex_energies
from src.theorems.alternation import check_alternation, check_bridge_path_alternation, check_edge_deletion
from src.theorems.base import classify, inverse, parity_direction, strictly
from src.theorems.quasi_order import check_deletion_order, check_lemma31, check_union_order
from src.theorems.structural import (
    check_adjacent_product,
    check_balance,
    check_coulson_agreement,
    check_identities,
    check_moments,
    check_star_closed_forms,
)
from src.theorems.subadditivity import (
    check_edge_cut_energy,
    check_energy_subadditivity,
    check_subadditivity_vertex,
)
from src.theorems.successive import run_successive, star_coalescence, star_limit_sweep, star_sweep_rows


EPS = 1e-8


class TestVerdicts:
    """Tests for the shared comparison helpers."""

    def test_classify(self):
        assert classify(1e-6, EPS) == Verdict.INCREASE
        assert classify(-1e-6, EPS) == Verdict.DECREASE
        assert classify(1e-9, EPS) == Verdict.INDETERMINATE

    def test_parity(self):
        assert parity_direction(0) == Verdict.INCREASE
        assert parity_direction(3) == Verdict.DECREASE
        assert inverse(Verdict.INCREASE) == Verdict.DECREASE
        assert inverse(Verdict.INDETERMINATE) == Verdict.INDETERMINATE

    def test_strictly(self):
        assert strictly("c", "s", 1.0, 2.0, EPS).status == CheckStatus.PASS
        assert strictly("c", "s", 1.0, 1.0 + 1e-10, EPS).status == CheckStatus.INDETERMINATE
        assert strictly("c", "s", 2.0, 1.0, EPS).status == CheckStatus.FAIL


class TestAlternation:
    """Tests for parity alternation under coalescence and edge deletion."""

    def test_p3_plus_edge(self):
        # P3 with K2 merged at an end is P4
        report = check_alternation(path_graph(3), 0, path_graph(2), 0, EPS)
        assert report.passed
        assert report.indeterminate == 0
        verdicts = [d.verdict for d in report.vertices]
        assert verdicts == [Verdict.INCREASE, Verdict.DECREASE, Verdict.INCREASE]
        assert report.vertices[0].before == pytest.approx(1 / math.sqrt(2))
        assert report.vertices[0].after == pytest.approx(3 / math.sqrt(5))

    @pytest.mark.parametrize("seed", range(10))
    def test_random_instances(self, seed):
        t = random_tree(9, seed)
        b = random_bipartite(3, 3, 0.5, seed)
        report = check_alternation(t, seed % 9, b, 0, EPS)
        assert report.passed
        assert len(report.records()) == t.n

    def test_preconditions(self):
        with pytest.raises(NotATreeError):
            check_alternation(cycle_graph(4), 0, path_graph(2), 0)
        with pytest.raises(NotBipartiteError):
            check_alternation(path_graph(3), 0, complete_graph(3), 0)
        with pytest.raises(GraphError):
            check_alternation(path_graph(3), 0, Graph.empty(2), 0)

    def test_pendant_edge_deletion(self):
        # P4 minus its first edge is K1 + P3
        report = check_edge_deletion(path_graph(4), 0, Graph.empty(1), 0, (0, 1), EPS)
        assert report.passed
        assert [d.verdict for d in report.vertices] == [
            Verdict.DECREASE, Verdict.DECREASE, Verdict.INCREASE, Verdict.DECREASE,
        ]
        assert report.vertices[1].after == pytest.approx(1 / math.sqrt(2))
        assert report.vertices[2].after == pytest.approx(math.sqrt(2))

    @pytest.mark.parametrize("seed", range(6))
    def test_edge_deletion_random(self, seed):
        t = random_tree(8, seed)
        b = random_bipartite(2, 3, 0.5, seed)
        edge = t.sorted_edges()[seed % t.m]
        assert check_edge_deletion(t, seed % 8, b, 0, edge, EPS).passed

    def test_edge_deletion_requires_tree_edge(self):
        with pytest.raises(GraphError):
            check_edge_deletion(path_graph(4), 0, path_graph(2), 0, (0, 2))

    def test_bridge_path(self):
        report = check_bridge_path_alternation(path_graph(2), 0, cycle_graph(4), 0, EPS)
        assert report.passed
        subjects = [r.subject for r in report.items]
        assert subjects[:2] == ["B1 w=0 d=0 even", "B1 w=1 d=1 odd"]

    def test_bridge_path_outside_component(self):
        b1 = Graph.from_pairs(4, [(0, 1), (2, 3)])
        report = check_bridge_path_alternation(b1, 0, path_graph(3), 1, EPS)
        assert report.passed
        unchanged = [r for r in report.items if r.check == "unchanged"]
        assert len(unchanged) == 2


class TestQuasiOrder:
    """Tests for the path forest comparisons and their energy consequences."""

    def test_p4_full_path(self):
        report = check_lemma31(path_graph(4), [0, 1, 2, 3])
        assert report.passed
        assert report.checked == 3

    @pytest.mark.parametrize("seed", range(8))
    def test_random_leaf_paths(self, seed):
        t = random_tree(10, seed)
        leaves = [x for x in range(t.n) if t.degree(x) == 1]
        assert check_lemma31(t, tree_path(t, leaves[0], leaves[-1])).passed

    def test_invalid_path(self):
        with pytest.raises(GraphError):
            check_lemma31(path_graph(4), [0, 2])
        with pytest.raises(GraphError):
            check_lemma31(path_graph(4), [1])

    def test_deletion_order_p3(self):
        report = check_deletion_order(path_graph(3), 0, 1, EPS)
        assert report.passed
        assert report.metadata["order"] == "strictly-less"

    def test_union_order(self):
        report = check_union_order(path_graph(2), 0, path_graph(3), 1, EPS)
        assert report.passed
        assert report.checked == 1

    def test_equal_order_on_symmetric_vertices(self):
        report = check_deletion_order(cycle_graph(6), 0, 3, EPS)
        assert report.metadata["order"] == "equal"
        assert report.passed


class TestSubadditivity:
    """Tests for subadditivity and edge cuts."""

    def test_vertex_subadditivity(self):
        report = check_subadditivity_vertex(path_graph(2), 0, path_graph(2), 0, EPS)
        assert report.passed
        assert report.items[0].observed == pytest.approx(math.sqrt(2))

    def test_isolated_equality(self):
        report = check_subadditivity_vertex(Graph.empty(1), 0, path_graph(2), 0, EPS)
        assert report.passed
        assert report.metadata["isolated"]

    @pytest.mark.parametrize("seed", range(6))
    def test_graph_energy_subadditivity(self, seed):
        g = random_bipartite(3, 4, 0.5, seed)
        h = random_tree(6, seed)
        assert check_energy_subadditivity(g, 1, h, 2, EPS).passed

    def test_edge_cut(self):
        assert check_edge_cut_energy(path_graph(4), [(1, 2)], EPS).passed
        assert check_edge_cut_energy(cycle_graph(4), [], EPS).passed
        assert check_edge_cut_energy(cycle_graph(6), [(0, 1), (3, 4)], EPS).passed

    def test_edge_cut_rejects_non_cuts(self):
        with pytest.raises(GraphError):
            check_edge_cut_energy(cycle_graph(4), [(0, 1)])
        with pytest.raises(GraphError):
            check_edge_cut_energy(cycle_graph(4), [(0, 2)])


class TestSuccessive:
    """Tests for successive coalescence and the star sweep."""

    def test_edges_onto_k2(self):
        schedule = [(path_graph(2), 0)] * 5
        report = run_successive(path_graph(2), 0, schedule, EPS)
        assert report.passed
        center, leaf = report.trajectories
        for k in range(6):
            assert center.energies[k] == pytest.approx(math.sqrt(k + 1))
            assert leaf.energies[k] == pytest.approx(1 / math.sqrt(k + 1))
        assert center.bound is None
        assert leaf.bound == pytest.approx(0.0)

    @pytest.mark.parametrize("seed", range(4))
    def test_random_schedules(self, seed):
        t = random_tree(6, seed)
        schedule = [(random_bipartite(2, 2, 0.5, seed * 10 + k), 0) for k in range(5)]
        assert run_successive(t, seed % 6, schedule, EPS).passed

    def test_star_coalescence_leaf(self):
        g, leaf = star_coalescence(path_graph(3), 2, 4)
        assert g.n == 7
        assert g.degree(2) == 5
        assert g.degree(leaf) == 1
        assert 1 / math.sqrt(5) <= vertex_energies(g)[leaf] <= 1 / 2

    def test_sweep_on_p3_end(self):
        report = star_limit_sweep(path_graph(3), 2, [1, 10, 50, 200], EPS)
        assert report.passed
        e = vertex_energies(star_coalescence(path_graph(3), 2, 200)[0])
        assert abs(e[0] - 1.0) < 0.05
        assert abs(e[1] - 1.0) < 0.1

    @pytest.mark.parametrize("seed", range(3))
    def test_sweep_random_tree(self, seed):
        t = random_tree(8, seed)
        report = star_limit_sweep(t, seed % 8, [1, 4, 16, 100], EPS)
        assert report.passed
        assert report.checked > 0

    def test_sweep_rows_on_k2(self):
        rows = star_sweep_rows(path_graph(2), 0, range(1, 11))
        assert len(rows) == 30
        for row in rows:
            n = row["n"]
            if row["vertex"] == "leaf":
                assert row["energy"] == pytest.approx(1 / math.sqrt(n + 1), abs=1e-9)
                assert row["lower"] - 1e-9 <= row["energy"] <= row["upper"] + 1e-9
            elif row["vertex"] == "0":
                assert math.sqrt(n) <= row["energy"] <= math.sqrt(n + 1) + 1e-9

    def test_sweep_requires_tree(self):
        with pytest.raises(NotATreeError):
            star_limit_sweep(cycle_graph(4), 0, [1])


class TestStructural:
    """Tests for balance, adjacent products, identities and moments."""

    @pytest.mark.parametrize("seed", range(5))
    def test_balance_and_products(self, seed):
        b = random_bipartite(4, 5, 0.5, seed)
        assert check_balance(b).passed
        assert check_adjacent_product(b).passed

    def test_balance_requires_bipartite(self):
        with pytest.raises(NotBipartiteError):
            check_balance(complete_graph(3))

    def test_identities(self):
        report = check_identities(random_tree(7, 1), 3, cycle_graph(6), 0)
        assert report.passed
        assert report.checked == 1 + 6

    def test_moments_on_triangle(self):
        report = check_moments(complete_graph(3), k_max=6)
        assert report.passed

    def test_star_closed_forms(self):
        report = check_star_closed_forms(20)
        assert report.passed
        assert report.checked == 60

    def test_coulson_agreement(self):
        assert check_coulson_agreement(star_graph(6)).passed
