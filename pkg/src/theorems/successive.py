"""
Successive coalescence at a fixed tree vertex, and the star-limit sweep.

G_0 = T and G_k = G_{k-1} ∘ B_k, always merging at the running copy of v.
Tree vertices keep their indices through every step, so a trajectory is
just the energy of the same index across G_0, G_1, ...
"""
import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.graphs.core import Graph, coalesce, delete_vertices, distances_from, star_graph
from src.models.schemas import CheckRecord, CheckStatus, TrajectoryRecord, TrajectoryReport, VerificationReport
from src.spectral.energy import graph_energy, vertex_energies
from src.theorems.base import at_least, at_most, require_bipartite, require_merge_degree, require_tree, resolve_epsilon


logger = logging.getLogger(__name__)

Step = Tuple[Graph, int]


def _monotone_status(values: Sequence[float], increasing: bool, epsilon: float) -> CheckStatus:
    steps = np.diff(np.asarray(values))
    if not increasing:
        steps = -steps
    if np.any(steps < -epsilon):
        return CheckStatus.FAIL
    if np.any(steps <= epsilon):
        return CheckStatus.INDETERMINATE
    return CheckStatus.PASS


def _bound_status(values: Sequence[float], bound: float, upper: bool, epsilon: float) -> CheckStatus:
    arr = np.asarray(values)
    ok = np.all(arr <= bound + epsilon) if upper else np.all(arr >= bound - epsilon)
    return CheckStatus.PASS if ok else CheckStatus.FAIL


def successive_graphs(t: Graph, v: int, schedule: Sequence[Step]) -> List[Graph]:
    """[G_0, G_1, ..., G_len(schedule)]."""
    graphs = [t]
    for b, u in schedule:
        graphs.append(coalesce(graphs[-1], v, b, u).graph)
    return graphs


def run_successive(
    t: Graph,
    v: int,
    schedule: Sequence[Step],
    epsilon: Optional[float] = None,
) -> TrajectoryReport:
    """
    Energy trajectories of every tree vertex across the successive coalescences.

    Even distance from v: strictly increasing, bounded above by E_{T-v}(w)
    except at v itself. Odd distance: strictly decreasing, bounded below by
    E_{T-v}(w).
    """
    epsilon = resolve_epsilon(epsilon)
    require_tree(t)
    t.check_vertex(v)
    for k, (b, u) in enumerate(schedule, start=1):
        require_bipartite(b, f"B_{k}")
        b.check_vertex(u)
        require_merge_degree(b, u, f"B_{k}")

    energies = np.array([vertex_energies(g)[: t.n] for g in successive_graphs(t, v, schedule)])
    removed = delete_vertices(t, [v])
    limit = vertex_energies(removed.graph)
    dist = distances_from(t, v)

    trajectories: List[TrajectoryRecord] = []
    for w in range(t.n):
        values = [float(x) for x in energies[:, w]]
        even = dist[w] % 2 == 0
        bound: Optional[float] = None
        bound_ok = CheckStatus.PASS
        if w != v:
            bound = float(limit[removed.index_map[w]])
            bound_ok = _bound_status(values, bound, upper=even, epsilon=epsilon)
        trajectories.append(TrajectoryRecord(
            vertex=w,
            distance=dist[w],
            energies=values,
            bound=bound,
            monotone=_monotone_status(values, increasing=even, epsilon=epsilon),
            bound_ok=bound_ok,
        ))

    report = TrajectoryReport(
        statement="successive coalescence",
        steps=len(schedule),
        trajectories=trajectories,
        metadata={"n_tree": t.n, "v": v, "steps": len(schedule)},
    )
    if report.violations:
        logger.error(f"{report.statement}: {report.violations} trajectory violations")
    return report


def star_coalescence(t: Graph, v_c: int, n: int) -> Tuple[Graph, int]:
    """S_{n+1} ∘ T with the star center on v_c; returns the graph and one leaf."""
    merged = coalesce(t, v_c, star_graph(n + 1), 0)
    return merged.graph, merged.map_right[1]


def star_limit_sweep(
    t: Graph,
    v_c: int,
    n_values: Sequence[int],
    epsilon: Optional[float] = None,
) -> VerificationReport:
    """
    Bracketing bounds for S_{n+1} ∘ T as n grows.

    At each n: the leaf lies in [1/sqrt(n+deg), 1/sqrt(n)], the center in
    [sqrt(n), sqrt(n+deg)] and E(S_{n+1} ∘ T) - E(T - v_c) in
    [2 sqrt(n), 2 sqrt(n+deg)], with deg = deg_T(v_c). Split T - v_c by the
    parity of the distance to v_c: the odd part's energy excess lies in
    [0, sqrt(n+deg) - n E(leaf)], the even part's in [sqrt(n) - E(center), 0].
    Over increasing n, the gap |E(w) - E_{T-v_c}(w)| of every other tree
    vertex does not grow.
    """
    epsilon = resolve_epsilon(epsilon)
    require_tree(t)
    t.check_vertex(v_c)
    deg = t.degree(v_c)
    removed = delete_vertices(t, [v_c])
    limit = vertex_energies(removed.graph)
    rest_energy = graph_energy(removed.graph)
    dist = distances_from(t, v_c)
    odd = [w for w in range(t.n) if w != v_c and dist[w] % 2]
    even = [w for w in range(t.n) if w != v_c and dist[w] % 2 == 0]

    items: List[CheckRecord] = []
    previous_gap: Dict[int, float] = {}
    for n in sorted(set(int(x) for x in n_values)):
        if n < 1:
            continue
        g, leaf = star_coalescence(t, v_c, n)
        e = vertex_energies(g)
        hi, lo = math.sqrt(n + deg), math.sqrt(n)
        tag = f"n={n}"

        items.append(at_most("leaf-upper", tag, float(e[leaf]), 1 / lo, epsilon))
        items.append(at_least("leaf-lower", tag, float(e[leaf]), 1 / hi, epsilon))
        items.append(at_least("center-lower", tag, float(e[v_c]), lo, epsilon))
        items.append(at_most("center-upper", tag, float(e[v_c]), hi, epsilon))

        excess = graph_energy(g) - rest_energy
        items.append(at_least("total-lower", tag, excess, 2 * lo, epsilon))
        items.append(at_most("total-upper", tag, excess, 2 * hi, epsilon))

        odd_excess = sum(float(e[w] - limit[removed.index_map[w]]) for w in odd)
        even_excess = sum(float(e[w] - limit[removed.index_map[w]]) for w in even)
        items.append(at_least("odd-part-lower", tag, odd_excess, 0.0, epsilon))
        items.append(at_most("odd-part-upper", tag, odd_excess, hi - n * float(e[leaf]), epsilon))
        items.append(at_least("even-part-lower", tag, even_excess, lo - float(e[v_c]), epsilon))
        items.append(at_most("even-part-upper", tag, even_excess, 0.0, epsilon))

        for w in odd + even:
            gap = abs(float(e[w]) - float(limit[removed.index_map[w]]))
            if w in previous_gap:
                items.append(at_most("gap-shrinks", f"{tag} w={w}", gap, previous_gap[w], epsilon))
            previous_gap[w] = gap

    report = VerificationReport(
        statement="star limit sweep",
        items=items,
        metadata={"n_tree": t.n, "v_c": v_c, "deg": deg},
    )
    if report.violations:
        logger.error(f"{report.statement}: {report.violations} bound violations")
    return report


def star_sweep_rows(t: Graph, v_c: int, n_values: Sequence[int]) -> List[Dict[str, object]]:
    """
    One row per (n, tree vertex) plus a leaf row, for CSV output.

    Rows carry the energy and the bounds that apply to that vertex; vertices
    other than v_c and the leaf get E_{T-v_c}(w) as their limit.
    """
    require_tree(t)
    t.check_vertex(v_c)
    deg = t.degree(v_c)
    removed = delete_vertices(t, [v_c])
    limit = vertex_energies(removed.graph)

    rows: List[Dict[str, object]] = []
    for n in n_values:
        n = int(n)
        if n < 1:
            continue
        g, leaf = star_coalescence(t, v_c, n)
        e = vertex_energies(g)
        rows.append({"n": n, "vertex": "leaf", "energy": float(e[leaf]),
                     "lower": 1 / math.sqrt(n + deg), "upper": 1 / math.sqrt(n)})
        for w in range(t.n):
            if w == v_c:
                rows.append({"n": n, "vertex": str(w), "energy": float(e[w]),
                             "lower": math.sqrt(n), "upper": math.sqrt(n + deg)})
            else:
                rows.append({"n": n, "vertex": str(w), "energy": float(e[w]),
                             "limit": float(limit[removed.index_map[w]])})
    return rows
