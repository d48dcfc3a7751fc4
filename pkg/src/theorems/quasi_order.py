"""
Quasi-order statements on bipartite graphs.

Forest comparisons are exact: b-sequences are compared as integers. The
energy comparisons they imply are then tested with the usual margin.
"""
import logging
from typing import FrozenSet, Iterable, List, Optional, Sequence

from src.algebra.charpoly import b_coeffs, compare_sequences
from src.errors import GraphError
from src.graphs.core import (
    Graph,
    component_of,
    delete_edges,
    delete_vertices,
    disjoint_union,
    induced_subgraph,
)
from src.models.schemas import CheckRecord, QuasiOrder, VerificationReport
from src.spectral.energy import vertex_energy
from src.theorems.base import close_to, exact, require_bipartite, require_tree, resolve_epsilon, strictly


logger = logging.getLogger(__name__)


def _component_in(g: Graph, vertices: Iterable[int], keep: int) -> FrozenSet[int]:
    """Component of g[vertices] containing keep, in g's labels."""
    sub = induced_subgraph(g, vertices)
    back = {new: old for old, new in sub.index_map.items()}
    return frozenset(back[x] for x in component_of(sub.graph, sub.index_map[keep]))


def _validate_path(t: Graph, path: List[int]) -> None:
    if len(path) < 2:
        raise GraphError("path needs at least two vertices")
    if len(set(path)) != len(path):
        raise GraphError(f"path {path} repeats a vertex")
    for x, y in zip(path, path[1:]):
        t.check_vertex(x)
        t.check_vertex(y)
        if not t.has_edge(x, y):
            raise GraphError(f"consecutive path vertices {x}, {y} are not adjacent")


def check_lemma31(t: Graph, path: Sequence[int], epsilon: Optional[float] = None) -> VerificationReport:
    """
    Forest comparisons along a path v1 ~ v2 ~ ... ~ vn of a tree.

    For each edge e_i = v_i v_{i+1}, A_i is the component of T - e_i
    holding v_i, Ã_i the component of A_i - v1 holding v2 (empty for i = 1)
    and T̃ the component of T - v1 holding v2. Then T ∪ Ã_i lies strictly
    above T̃ ∪ A_i for odd i and strictly below for even i. epsilon is
    accepted for a uniform signature; every comparison here is exact.
    """
    require_tree(t)
    path = [int(x) for x in path]
    _validate_path(t, path)

    v1, v2 = path[0], path[1]
    t_tilde = induced_subgraph(t, _component_in(t, (x for x in range(t.n) if x != v1), v2)).graph

    items: List[CheckRecord] = []
    for i in range(1, len(path)):
        a_vertices = component_of(delete_edges(t, [(path[i - 1], path[i])]), path[i - 1])
        a_i = induced_subgraph(t, a_vertices).graph
        if i == 1:
            a_tilde = Graph.empty(0)
        else:
            a_tilde = induced_subgraph(t, _component_in(t, a_vertices - {v1}, v2)).graph

        left, _ = disjoint_union(t, a_tilde)
        right, _ = disjoint_union(t_tilde, a_i)
        b_left, b_right = b_coeffs(left), b_coeffs(right)
        outcome = compare_sequences(b_left.values, b_right.values)
        expected = QuasiOrder.GREATER if i % 2 else QuasiOrder.LESS
        items.append(exact(
            "path-quasi-order",
            f"i={i} {'odd' if i % 2 else 'even'}",
            outcome == expected,
            f"{b_left} vs {b_right}: {outcome.value}, expected {expected.value}",
        ))

    report = VerificationReport(statement="path forest quasi-order", items=items, metadata={"path": path})
    if report.violations:
        logger.error(f"{report.statement}: {report.violations} parity violations on path {path}")
    return report


def _order_record(
    check: str,
    subject: str,
    order: QuasiOrder,
    e_low: float,
    e_high: float,
    epsilon: float,
    detail: str,
) -> Optional[CheckRecord]:
    """
    Energy consequence of a quasi-order outcome.

    GREATER means e_low < e_high, LESS the reverse and EQUAL equality.
    INCOMPARABLE carries no claim and yields None.
    """
    if order == QuasiOrder.INCOMPARABLE:
        return None
    if order == QuasiOrder.EQUAL:
        return close_to(check, subject, e_low, e_high, epsilon, detail)
    if order == QuasiOrder.LESS:
        e_low, e_high = e_high, e_low
    return strictly(check, subject, e_low, e_high, epsilon, detail)


def check_deletion_order(
    g: Graph,
    v: int,
    w: int,
    epsilon: Optional[float] = None,
) -> VerificationReport:
    """If G - w lies above G - v in the quasi-order then E_G(w) < E_G(v)."""
    epsilon = resolve_epsilon(epsilon)
    require_bipartite(g, "G")
    g.check_vertex(v)
    g.check_vertex(w)

    b_w = b_coeffs(delete_vertices(g, [w]).graph)
    b_v = b_coeffs(delete_vertices(g, [v]).graph)
    order = compare_sequences(b_w.values, b_v.values)
    e_w, e_v = vertex_energy(g, w), vertex_energy(g, v)

    items: List[CheckRecord] = []
    record = _order_record(
        "deletion-order", f"w={w} v={v}", order, e_w, e_v, epsilon,
        f"G-w {b_w} vs G-v {b_v}: {order.value}",
    )
    if record is not None:
        items.append(record)
    return VerificationReport(
        statement="vertex deletion quasi-order",
        items=items,
        metadata={"n": g.n, "v": v, "w": w, "order": order.value},
    )


def check_union_order(
    g1: Graph,
    v: int,
    g2: Graph,
    w: int,
    epsilon: Optional[float] = None,
) -> VerificationReport:
    """If G1 ∪ (G2 - w) lies above G2 ∪ (G1 - v) then E_{G2}(w) < E_{G1}(v)."""
    epsilon = resolve_epsilon(epsilon)
    require_bipartite(g1, "G1")
    require_bipartite(g2, "G2")
    g1.check_vertex(v)
    g2.check_vertex(w)

    left, _ = disjoint_union(g1, delete_vertices(g2, [w]).graph)
    right, _ = disjoint_union(g2, delete_vertices(g1, [v]).graph)
    b_left, b_right = b_coeffs(left), b_coeffs(right)
    order = compare_sequences(b_left.values, b_right.values)
    e_w, e_v = vertex_energy(g2, w), vertex_energy(g1, v)

    items: List[CheckRecord] = []
    record = _order_record(
        "union-order", f"G1 v={v} G2 w={w}", order, e_w, e_v, epsilon,
        f"{b_left} vs {b_right}: {order.value}",
    )
    if record is not None:
        items.append(record)
    return VerificationReport(
        statement="union quasi-order",
        items=items,
        metadata={"n1": g1.n, "n2": g2.n, "v": v, "w": w, "order": order.value},
    )
