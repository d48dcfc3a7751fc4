"""
Seeded verification suites.

Each suite is a named stream of instances. Random instance k draws from
its own generator seeded by (suite seed, k), so reports do not depend on
evaluation order and two runs with one seed are identical.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

import numpy as np

from src.config import settings
from src.errors import UnknownSuiteError
from src.graphs.core import (
    Graph,
    cut_edges,
    cycle_graph,
    disjoint_union,
    tree_path,
)
from src.graphs.generators import instance_rng, random_bipartite, random_graph, random_tree
from src.models.schemas import ReportBase, RunConfig, SuiteReport
from src.monitoring.metrics import record_check, track_suite
from src.theorems.alternation import check_alternation, check_bridge_path_alternation, check_edge_deletion
from src.theorems.hnd import check_hnd_domination, hnd_build, hnd_verify, series_bound_check
from src.theorems.quasi_order import check_deletion_order, check_lemma31, check_union_order
from src.theorems.structural import (
    check_adjacent_product,
    check_balance,
    check_coulson_agreement,
    check_edge_recursion,
    check_identities,
    check_moments,
    check_star_closed_forms,
)
from src.theorems.subadditivity import (
    check_edge_cut_energy,
    check_energy_subadditivity,
    check_subadditivity_vertex,
)
from src.theorems.successive import run_successive, star_limit_sweep


logger = logging.getLogger(__name__)

Reports = Union[ReportBase, List[ReportBase]]
RandomBuilder = Callable[["SuiteRunner", np.random.Generator, int], Reports]
FixedBuilder = Callable[["SuiteRunner"], Iterator[Reports]]

SUCCESSIVE_TREE_MAX = 8
SUCCESSIVE_STEPS = 10
SUCCESSIVE_PART_MAX = 2
COULSON_TREE_MAX = 10
MOMENT_GRAPH_MAX = 10
MOMENT_MAX_POWER = 8
IDENTITY_TREES_WITH_RECURSION = 50
HND_GRID = (8, 5)


@dataclass(frozen=True)
class SuiteDefinition:
    name: str
    description: str
    random: Optional[RandomBuilder] = None
    fixed: Optional[FixedBuilder] = None
    default_trials: int = 0


class SuiteRunner:
    """
    Runs registered suites under one RunConfig.

    Usage:
        runner = SuiteRunner(RunConfig.from_settings(seed=7))
        report = runner.run("alternation")
        print(report.summary_line())
    """

    SUITES: Dict[str, SuiteDefinition] = {}

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig.from_settings()

    @classmethod
    def names(cls) -> List[str]:
        return list(cls.SUITES)

    @classmethod
    def register(cls, definition: SuiteDefinition) -> None:
        cls.SUITES[definition.name] = definition

    # -------- Public API --------
    def run(self, name: str) -> SuiteReport:
        definition = self.SUITES.get(name)
        if definition is None:
            raise UnknownSuiteError(name, self.names())

        logger.info(f"Running suite {name} with seed {self.config.seed}")
        report = SuiteReport(name=name, seed=self.config.seed)
        with track_suite(name):
            for index, result in enumerate(self._instances(definition)):
                for item in result if isinstance(result, list) else [result]:
                    report.extend(index, item)

        record_check(name, "pass", report.checked - report.violations - report.indeterminate)
        record_check(name, "fail", report.violations)
        record_check(name, "indeterminate", report.indeterminate)
        log = logger.error if report.violations else logger.info
        log(report.summary_line())
        return report

    def trials(self, definition: SuiteDefinition) -> int:
        return self.config.trials or definition.default_trials

    def _instances(self, definition: SuiteDefinition) -> Iterator[Reports]:
        if definition.random is not None:
            for index in range(self.trials(definition)):
                yield definition.random(self, instance_rng(self.config.seed, index), index)
        if definition.fixed is not None:
            yield from definition.fixed(self)

    # -------- Instance helpers --------
    @property
    def epsilon(self) -> float:
        return self.config.epsilon

    def tree(self, rng: np.random.Generator, max_n: Optional[int] = None, min_n: int = 2) -> Graph:
        max_n = max(min_n, max_n or self.config.max_tree)
        return random_tree(int(rng.integers(min_n, max_n + 1)), rng)

    def bipartite(self, rng: np.random.Generator, max_n: Optional[int] = None, part_max: Optional[int] = None) -> Graph:
        """Random bipartite graph of order <= max_n; vertex 0 always has a neighbour."""
        max_n = max(2, max_n or self.config.max_bip)
        n1_cap = min(part_max or max_n - 1, max_n - 1)
        n1 = int(rng.integers(1, n1_cap + 1))
        n2_cap = min(part_max or max_n - n1, max_n - n1)
        n2 = int(rng.integers(1, n2_cap + 1))
        return random_bipartite(n1, n2, settings.bipartite_edge_prob, rng)

    @staticmethod
    def vertex(rng: np.random.Generator, g: Graph) -> int:
        return int(rng.integers(g.n))

    @staticmethod
    def merge_vertex(rng: np.random.Generator, g: Graph) -> int:
        """A random vertex with at least one neighbour."""
        candidates = [x for x in range(g.n) if g.degree(x) > 0]
        return int(rng.choice(candidates))


# ================== Suite builders ==================

def _alternation(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    t = r.tree(rng)
    b = r.bipartite(rng)
    return check_alternation(t, r.vertex(rng, t), b, r.merge_vertex(rng, b), r.epsilon)


def _lemma31(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    t = r.tree(rng)
    leaves = [x for x in range(t.n) if t.degree(x) == 1]
    start, end = rng.choice(leaves, size=2, replace=False)
    return check_lemma31(t, tree_path(t, int(start), int(end)), r.epsilon)


def _edge_deletion(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    t = r.tree(rng)
    v = r.vertex(rng, t)
    if rng.random() < 0.25:
        b, u = Graph.empty(1), 0
    else:
        b = r.bipartite(rng)
        u = r.merge_vertex(rng, b)
    edges = t.sorted_edges()
    e = edges[int(rng.integers(len(edges)))]
    return check_edge_deletion(t, v, b, u, e, r.epsilon)


def _subadd_vertex(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    g = r.bipartite(rng)
    h = r.bipartite(rng)
    u, v = r.vertex(rng, g), r.vertex(rng, h)
    if rng.random() < 0.2:
        # isolated merge vertex: the equality case
        g, _ = disjoint_union(g, Graph.empty(1))
        u = g.n - 1
    return check_subadditivity_vertex(g, u, h, v, r.epsilon)


def _subadd_energy(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    g = r.bipartite(rng)
    h = r.tree(rng, r.config.max_bip)
    return check_energy_subadditivity(g, r.vertex(rng, g), h, r.vertex(rng, h), r.epsilon)


def _edge_cut(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    g = r.bipartite(rng)
    side = [x for x in range(g.n) if rng.random() < 0.5]
    return check_edge_cut_energy(g, cut_edges(g, side), r.epsilon)


def _successive(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    t = r.tree(rng, SUCCESSIVE_TREE_MAX)
    v = r.vertex(rng, t)
    schedule: List[Tuple[Graph, int]] = []
    for _ in range(SUCCESSIVE_STEPS):
        b = r.bipartite(rng, part_max=SUCCESSIVE_PART_MAX)
        schedule.append((b, r.merge_vertex(rng, b)))
    return run_successive(t, v, schedule, r.epsilon)


def _star_limit(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    t = r.tree(rng, min_n=1)
    return star_limit_sweep(t, r.vertex(rng, t), settings.star_sweep_values, r.epsilon)


def _series_bound(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    d_seq = rng.integers(1, 7, size=int(rng.integers(1, 11))).tolist()
    return series_bound_check(d_seq, r.epsilon)


def _hnd_domination(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    d_seq = rng.integers(1, 6, size=int(rng.integers(1, 9))).tolist()
    return check_hnd_domination(d_seq, r.epsilon)


def _balance(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    return check_balance(r.bipartite(rng))


def _adjacent_product(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    return check_adjacent_product(r.bipartite(rng))


def _identities(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    g = r.tree(rng)
    h = r.bipartite(rng)
    return check_identities(g, r.vertex(rng, g), h, r.vertex(rng, h),
                            edge_recursion=index < IDENTITY_TREES_WITH_RECURSION)


def _moments(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    n = int(rng.integers(1, MOMENT_GRAPH_MAX + 1))
    return check_moments(random_graph(n, 0.4, rng), MOMENT_MAX_POWER)


def _coulson(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    t = r.tree(rng, COULSON_TREE_MAX, min_n=1)
    return check_coulson_agreement(t, r.config.quadrature())


def _deletion_order(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    g = r.bipartite(rng)
    reports: List[ReportBase] = [
        check_deletion_order(g, v, w, r.epsilon) for v in range(g.n) for w in range(v + 1, g.n)
    ]
    h = r.bipartite(rng)
    reports.append(check_union_order(g, r.vertex(rng, g), h, r.vertex(rng, h), r.epsilon))
    return reports


def _bridge_path(r: SuiteRunner, rng: np.random.Generator, index: int) -> Reports:
    b1 = r.bipartite(rng)
    b2 = r.tree(rng, r.config.max_bip) if rng.random() < 0.5 else r.bipartite(rng)
    return check_bridge_path_alternation(b1, r.merge_vertex(rng, b1), b2, r.merge_vertex(rng, b2), r.epsilon)


def _fixed_hnd(r: SuiteRunner) -> Iterator[Reports]:
    n_max, d_max = HND_GRID
    for n in range(1, n_max + 1):
        for d in range(1, d_max + 1):
            yield hnd_verify(hnd_build(n, d), r.epsilon)


def _fixed_cycles(r: SuiteRunner) -> Iterator[Reports]:
    c4_pendant = Graph.from_pairs(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    for g in (cycle_graph(4), cycle_graph(6), c4_pendant):
        yield check_edge_recursion(g)


def _fixed_stars(r: SuiteRunner) -> Iterator[Reports]:
    yield check_star_closed_forms(50)


for _definition in (
    SuiteDefinition("alternation", "tree vertex energies alternate by parity after coalescence",
                    random=_alternation, default_trials=200),
    SuiteDefinition("lemma31", "forest quasi-order along maximal tree paths", random=_lemma31, default_trials=100),
    SuiteDefinition("edge-deletion", "parity pattern reverses when a tree edge is deleted",
                    random=_edge_deletion, default_trials=100),
    SuiteDefinition("subadd-vertex", "merged vertex energy is at most the sum of the two",
                    random=_subadd_vertex, default_trials=100),
    SuiteDefinition("subadd-energy", "graph energy is subadditive under coalescence",
                    random=_subadd_energy, default_trials=100),
    SuiteDefinition("edge-cut", "removing an edge cut does not raise energy", random=_edge_cut, default_trials=100),
    SuiteDefinition("successive", "monotone bounded trajectories under repeated coalescence",
                    random=_successive, default_trials=20),
    SuiteDefinition("star-limit", "bracketing bounds for a growing star on a tree",
                    random=_star_limit, default_trials=5),
    SuiteDefinition("hnd", "closed forms of H_(n,d) over n <= 8, d <= 5", fixed=_fixed_hnd),
    SuiteDefinition("series-bound", "merge vertex energy below 1 + sum 1/sqrt(d_i + 1)",
                    random=_series_bound, default_trials=10),
    SuiteDefinition("balance", "equal energy on both parts of a bipartite graph", random=_balance, default_trials=100),
    SuiteDefinition("adjacent-product", "E(i) E(j) >= 1 on every edge", random=_adjacent_product, default_trials=100),
    SuiteDefinition("identities", "coalescence identity and edge recursion, exact",
                    random=_identities, fixed=_fixed_cycles, default_trials=100),
    SuiteDefinition("moments", "spectral moments equal closed walk counts", random=_moments, default_trials=50),
    SuiteDefinition("stars", "star energies in closed form", fixed=_fixed_stars),
    SuiteDefinition("coulson", "quadrature agrees with the eigendecomposition", random=_coulson, default_trials=50),
    SuiteDefinition("deletion-order", "quasi-order of vertex-deleted graphs orders energies",
                    random=_deletion_order, default_trials=50),
    SuiteDefinition("bridge-path", "alternation along bridge paths of bipartite graphs",
                    random=_bridge_path, default_trials=100),
    SuiteDefinition("hnd-domination", "star chains against H_(n, max d)",
                    random=_hnd_domination, default_trials=10),
):
    SuiteRunner.register(_definition)


def run_suite(name: str, config: Optional[RunConfig] = None) -> SuiteReport:
    return SuiteRunner(config).run(name)
