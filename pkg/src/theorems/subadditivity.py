"""
Subadditivity of energy under coalescence and monotonicity under edge cuts.
"""
import logging
from typing import Iterable, List, Optional, Sequence

from src.errors import GraphError
from src.graphs.core import Graph, canonical_edge, coalesce, delete_edges, is_edge_cut
from src.models.schemas import CheckRecord, CheckStatus, VerificationReport
from src.spectral.energy import graph_energy, vertex_energy
from src.theorems.base import at_most, require_bipartite, resolve_epsilon


logger = logging.getLogger(__name__)


def check_subadditivity_vertex(
    g: Graph,
    u: int,
    h: Graph,
    v: int,
    epsilon: Optional[float] = None,
) -> VerificationReport:
    """
    E_{G∘H}(w) <= E_G(u) + E_H(v) for the merged vertex w, with equality
    exactly when u or v is isolated in its own graph.
    """
    epsilon = resolve_epsilon(epsilon)
    require_bipartite(g, "G")
    require_bipartite(h, "H")
    g.check_vertex(u)
    h.check_vertex(v)

    merged = coalesce(g, u, h, v)
    observed = vertex_energy(merged.graph, merged.merged)
    bound = vertex_energy(g, u) + vertex_energy(h, v)
    isolated = g.degree(u) == 0 or h.degree(v) == 0
    equal = abs(bound - observed) <= epsilon

    items: List[CheckRecord] = [
        at_most("vertex-subadditivity", f"u={u} v={v}", observed, bound, epsilon),
        CheckRecord(
            check="equality-condition",
            subject=f"u={u} v={v}",
            observed=observed,
            reference=bound,
            status=CheckStatus.PASS if equal == isolated else CheckStatus.FAIL,
            detail=f"equal={equal} isolated={isolated}",
        ),
    ]
    report = VerificationReport(
        statement="vertex energy subadditivity",
        items=items,
        metadata={"n_g": g.n, "n_h": h.n, "u": u, "v": v, "isolated": isolated},
    )
    if report.violations:
        logger.error(f"{report.statement} violated: {observed:.12g} against {bound:.12g} (isolated={isolated})")
    return report


def check_energy_subadditivity(
    g: Graph,
    u: int,
    h: Graph,
    v: int,
    epsilon: Optional[float] = None,
) -> VerificationReport:
    """E(G∘H) <= E(G) + E(H) for arbitrary graphs."""
    epsilon = resolve_epsilon(epsilon)
    g.check_vertex(u)
    h.check_vertex(v)
    merged = coalesce(g, u, h, v).graph
    record = at_most("energy-subadditivity", f"u={u} v={v}", graph_energy(merged), graph_energy(g) + graph_energy(h), epsilon)
    return VerificationReport(
        statement="graph energy subadditivity",
        items=[record],
        metadata={"n_g": g.n, "n_h": h.n, "u": u, "v": v},
    )


def check_edge_cut_energy(
    g: Graph,
    cut: Iterable[Sequence[int]],
    epsilon: Optional[float] = None,
) -> VerificationReport:
    """
    E(G - F) <= E(G) when F is an edge cut.

    An empty F is accepted and must give equality. A non-empty F has to be
    the full set of edges between the parts of some vertex partition.
    """
    epsilon = resolve_epsilon(epsilon)
    edges = sorted({canonical_edge(int(e[0]), int(e[1])) for e in cut})
    for e in edges:
        if e not in g.edges:
            raise GraphError(f"edge {e} not in graph")
    if edges and not is_edge_cut(g, edges):
        raise GraphError(f"{edges} is not an edge cut of {g}")

    before = graph_energy(g)
    after = graph_energy(delete_edges(g, edges))
    record = at_most("edge-cut-energy", f"|F|={len(edges)}", after, before, epsilon)
    return VerificationReport(
        statement="edge cut energy",
        items=[record],
        metadata={"n": g.n, "cut": [list(e) for e in edges]},
    )
