"""
Tests for the Coulson-type quadrature route to vertex energy.
"""

import math

import pytest
from pydantic import ValidationError

from src.errors import ConvergenceError
from src.graphs.core import Graph, complete_graph, cycle_graph, path_graph, star_graph
from src.graphs.generators import random_graph, random_tree
from src.models.schemas import QuadratureConfig
from src.spectral.coulson import coulson_integrand, coulson_vertex_energy
from src.spectral.energy import vertex_energies


class TestCoulsonEnergy:
    """Quadrature against closed forms and the eigendecomposition."""

    def test_k2(self):
        assert coulson_vertex_energy(path_graph(2), 0) == pytest.approx(1.0, abs=1e-7)

    def test_p4(self):
        g = path_graph(4)
        assert coulson_vertex_energy(g, 0) == pytest.approx(2 / math.sqrt(5), abs=1e-7)
        assert coulson_vertex_energy(g, 1) == pytest.approx(3 / math.sqrt(5), abs=1e-7)

    def test_star(self):
        g = star_graph(5)
        assert coulson_vertex_energy(g, 0) == pytest.approx(2.0, abs=1e-7)
        assert coulson_vertex_energy(g, 3) == pytest.approx(0.5, abs=1e-7)

    def test_triangle(self):
        assert coulson_vertex_energy(complete_graph(3), 0) == pytest.approx(4 / 3, abs=1e-7)

    def test_isolated_vertex(self):
        g = Graph.from_pairs(3, [(0, 1)])
        assert coulson_vertex_energy(g, 2) == pytest.approx(0.0, abs=1e-12)
        assert coulson_vertex_energy(Graph.empty(1), 0) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("seed", range(6))
    def test_agrees_with_spectrum_on_trees(self, seed):
        t = random_tree(10, seed)
        spectral = vertex_energies(t)
        for i in range(t.n):
            assert coulson_vertex_energy(t, i) == pytest.approx(spectral[i], abs=1e-6)

    @pytest.mark.parametrize("seed", range(3))
    def test_agrees_with_spectrum_on_general_graphs(self, seed):
        g = random_graph(7, 0.5, seed)
        spectral = vertex_energies(g)
        for i in range(g.n):
            assert coulson_vertex_energy(g, i) == pytest.approx(spectral[i], abs=1e-6)

    def test_singular_graph(self):
        # C4 has a double zero eigenvalue
        assert coulson_vertex_energy(cycle_graph(4), 0) == pytest.approx(1.0, abs=1e-7)

    def test_depth_cap(self):
        cfg = QuadratureConfig(rel_tol=1e-12, max_depth=1, initial_panels=1)
        with pytest.raises(ConvergenceError):
            coulson_vertex_energy(path_graph(5), 1, cfg)

    def test_config_validation(self):
        with pytest.raises(ValidationError):
            QuadratureConfig(rel_tol=0.0)
        with pytest.raises(ValidationError):
            QuadratureConfig(max_depth=0)


class TestIntegrand:
    """Symmetry and decay of the integrand."""

    def test_conjugate_symmetry(self):
        f = coulson_integrand(random_graph(6, 0.5, 4), 2)
        for x in (0.3, 1.7, 12.0):
            assert f(-x).real == pytest.approx(f(x).real)
            assert f(-x).imag == pytest.approx(-f(x).imag)

    def test_real_on_bipartite(self):
        f = coulson_integrand(path_graph(5), 2)
        for x in (0.1, 1.0, 10.0):
            assert abs(f(x).imag) < 1e-12

    def test_decay_matches_degree(self):
        g = path_graph(4)
        f = coulson_integrand(g, 1)
        x = 1e4
        assert (f(x) * x * x).real == pytest.approx(g.degree(1), rel=1e-3)

    def test_value_at_zero(self):
        # P2: 1 - ix * ix / ((ix)^2 - 1) at x = 0 is 1
        f = coulson_integrand(path_graph(2), 0)
        assert f(0.0) == pytest.approx(1.0)
