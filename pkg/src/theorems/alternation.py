"""
Parity alternation of vertex energies under coalescence and edge deletion.

Coalescing a bipartite graph B onto vertex v of a tree T raises the energy
of every tree vertex at even distance from v and lowers it at odd
distance. Deleting a tree edge reverses the pattern on both sides of the
edge, measured from the edge's endpoint on each side.
"""
import logging
from typing import Dict, List, Optional, Sequence

from src.errors import GraphError
from src.graphs.core import (
    Graph,
    bridges,
    canonical_edge,
    coalesce,
    component_of,
    delete_edges,
    distances_from,
)
from src.models.schemas import AlternationReport, CheckRecord, VerificationReport, Verdict, VertexDelta
from src.spectral.energy import vertex_energies
from src.theorems.base import (
    classify,
    close_to,
    inverse,
    parity_direction,
    require_bipartite,
    require_merge_degree,
    require_tree,
    resolve_epsilon,
)


logger = logging.getLogger(__name__)


def _delta(
    vertex: int,
    mapped: int,
    distance: int,
    before: float,
    after: float,
    expected: Verdict,
    epsilon: float,
) -> VertexDelta:
    delta = after - before
    return VertexDelta(
        vertex=vertex,
        mapped_vertex=mapped,
        distance=distance,
        before=before,
        after=after,
        delta=delta,
        verdict=classify(delta, epsilon),
        expected=expected,
    )


def _log_outcome(report: AlternationReport) -> None:
    if report.violations:
        logger.error(f"{report.statement}: {report.violations} parity violations")
    if report.indeterminate:
        logger.warning(f"{report.statement}: {report.indeterminate} changes within epsilon")


def check_alternation(
    t: Graph,
    v: int,
    b: Graph,
    u: int,
    epsilon: Optional[float] = None,
) -> AlternationReport:
    """Compare E_T(w) with E_{T∘B}(w) for every vertex w of the tree."""
    epsilon = resolve_epsilon(epsilon)
    require_tree(t)
    require_bipartite(b)
    t.check_vertex(v)
    b.check_vertex(u)
    require_merge_degree(b, u)

    merged = coalesce(t, v, b, u)
    before = vertex_energies(t)
    after = vertex_energies(merged.graph)
    dist = distances_from(t, v)

    deltas = [
        _delta(w, merged.map_left[w], dist[w], float(before[w]), float(after[merged.map_left[w]]),
               parity_direction(dist[w]), epsilon)
        for w in range(t.n)
    ]
    report = AlternationReport(
        statement="coalescence alternation",
        epsilon=epsilon,
        vertices=deltas,
        metadata={"n_tree": t.n, "n_bipartite": b.n, "v": v, "u": u},
    )
    _log_outcome(report)
    return report


def check_edge_deletion(
    t: Graph,
    v: int,
    b: Graph,
    u: int,
    edge: Sequence[int],
    epsilon: Optional[float] = None,
) -> AlternationReport:
    """
    Delete a tree edge (v1, v2) from T∘B and compare energies of the tree's vertices.

    B may be a single vertex, in which case the coalescence is T itself.
    """
    epsilon = resolve_epsilon(epsilon)
    require_tree(t)
    require_bipartite(b)
    t.check_vertex(v)
    b.check_vertex(u)
    e = canonical_edge(int(edge[0]), int(edge[1]))
    if e not in t.edges:
        raise GraphError(f"edge {e} is not an edge of the tree")

    merged = coalesce(t, v, b, u)
    cut = delete_edges(merged.graph, [(merged.map_left[e[0]], merged.map_left[e[1]])])
    before = vertex_energies(merged.graph)
    after = vertex_energies(cut)

    # distance from w to the endpoint on its own side of the edge
    t_cut = delete_edges(t, [e])
    dist: Dict[int, int] = {}
    for end in e:
        dist.update(distances_from(t_cut, end))

    deltas: List[VertexDelta] = []
    for w in range(t.n):
        mapped = merged.map_left[w]
        deltas.append(_delta(w, mapped, dist[w], float(before[mapped]), float(after[mapped]),
                             inverse(parity_direction(dist[w])), epsilon))
    report = AlternationReport(
        statement="edge deletion alternation",
        epsilon=epsilon,
        vertices=deltas,
        metadata={"n_tree": t.n, "n_bipartite": b.n, "v": v, "u": u, "edge": list(e)},
    )
    _log_outcome(report)
    return report


def _bridge_distances(g: Graph, root: int) -> Dict[int, int]:
    """Vertices joined to root by a path made only of bridges, with its length."""
    bridge_graph = Graph(g.n, bridges(g))
    return distances_from(bridge_graph, root)


def check_bridge_path_alternation(
    b1: Graph,
    u1: int,
    b2: Graph,
    u2: int,
    epsilon: Optional[float] = None,
) -> VerificationReport:
    """
    Alternation for a coalescence of two bipartite graphs.

    On each side, vertices reached from the merge vertex along bridges
    follow the parity rule; vertices outside the merge vertex's component
    keep their energy. Other vertices are not constrained and are skipped.
    """
    epsilon = resolve_epsilon(epsilon)
    require_bipartite(b1, "B1")
    require_bipartite(b2, "B2")
    b1.check_vertex(u1)
    b2.check_vertex(u2)
    require_merge_degree(b1, u1, "B1")
    require_merge_degree(b2, u2, "B2")

    merged = coalesce(b1, u1, b2, u2)
    after = vertex_energies(merged.graph)
    items: List[CheckRecord] = []
    for side, (g, root, mapping) in enumerate(((b1, u1, merged.map_left), (b2, u2, merged.map_right)), start=1):
        before = vertex_energies(g)
        reachable = _bridge_distances(g, root)
        home = component_of(g, root)
        for w in range(g.n):
            old, new = float(before[w]), float(after[mapping[w]])
            subject = f"B{side} w={w}"
            if w in reachable:
                d = reachable[w]
                delta = _delta(w, mapping[w], d, old, new, parity_direction(d), epsilon)
                items.append(CheckRecord(
                    check="bridge-path",
                    subject=f"{subject} d={d} {delta.parity}",
                    observed=new,
                    reference=old,
                    status=delta.status,
                    detail=f"expected {delta.expected.value}, got {delta.verdict.value}",
                ))
            elif w not in home:
                items.append(close_to("unchanged", subject, new, old, epsilon, "outside the merge component"))

    report = VerificationReport(
        statement="bridge-path alternation",
        items=items,
        metadata={"n1": b1.n, "n2": b2.n, "u1": u1, "u2": u2},
    )
    if report.violations:
        logger.error(f"{report.statement}: {report.violations} violations")
    return report
