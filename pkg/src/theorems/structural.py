"""
Checks of standing facts about vertex energy: part balance, adjacent
products, exact polynomial identities, moments against walk counts, star
closed forms and agreement with the quadrature oracle.
"""
import logging
import math
from typing import List, Optional

import numpy as np

from src.algebra.charpoly import coalescence_identity_sides, edge_recursion_sides
from src.config import settings
from src.graphs.core import Graph, bipartition, star_graph
from src.models.schemas import CheckRecord, QuadratureConfig, VerificationReport
from src.spectral.coulson import coulson_vertex_energy
from src.spectral.energy import graph_energy, spectral_moment, vertex_energies, walk_count, weight_matrix
from src.theorems.base import at_least, at_most, close_to, exact, require_bipartite


logger = logging.getLogger(__name__)


def check_balance(g: Graph, tol: float = 1e-8) -> VerificationReport:
    """The two parts of a bipartite graph carry equal total energy."""
    require_bipartite(g, "G")
    parts = bipartition(g)
    e = vertex_energies(g)
    left = float(sum(e[x] for x in parts.part1))
    right = float(sum(e[x] for x in parts.part2))
    record = close_to("part-balance", f"|V1|={len(parts.part1)} |V2|={len(parts.part2)}",
                      left, right, tol * max(1, g.n))
    return VerificationReport(statement="part balance", items=[record], metadata={"n": g.n})


def check_adjacent_product(g: Graph, tol: float = 1e-9) -> VerificationReport:
    """E(i) * E(j) >= 1 for every edge ij."""
    e = vertex_energies(g)
    items = [
        at_least("adjacent-product", f"{a}-{b}", float(e[a] * e[b]), 1.0, tol)
        for a, b in g.sorted_edges()
    ]
    return VerificationReport(statement="adjacent product", items=items, metadata={"n": g.n, "m": g.m})


def check_identities(g: Graph, u: int, h: Graph, v: int, edge_recursion: bool = True) -> VerificationReport:
    """
    Exact coalescence identity for (G, u, H, v); optionally the edge
    recursion at every edge of G as well.
    """
    items: List[CheckRecord] = []
    lhs, rhs = coalescence_identity_sides(g, u, h, v)
    items.append(exact("coalescence-identity", f"u={u} v={v}", lhs == rhs,
                       "" if lhs == rhs else f"{lhs} != {rhs}"))
    if edge_recursion:
        items.extend(_edge_recursion_records(g))
    return VerificationReport(statement="characteristic polynomial identities", items=items,
                              metadata={"n_g": g.n, "n_h": h.n})


def check_edge_recursion(g: Graph) -> VerificationReport:
    return VerificationReport(statement="edge recursion", items=_edge_recursion_records(g), metadata={"n": g.n})


def _edge_recursion_records(g: Graph) -> List[CheckRecord]:
    records = []
    for e in g.sorted_edges():
        lhs, rhs = edge_recursion_sides(g, e)
        records.append(exact("edge-recursion", f"{e[0]}-{e[1]}", lhs == rhs,
                             "" if lhs == rhs else f"{lhs} != {rhs}"))
    return records


def check_moments(g: Graph, k_max: int = 8) -> VerificationReport:
    """
    Spectral moments against exact closed-walk counts, plus the weight
    matrix and energy-sum invariants.
    """
    items: List[CheckRecord] = []
    for i in range(g.n):
        for k in range(k_max + 1):
            walks = walk_count(g, i, k)
            items.append(close_to("moment", f"i={i} k={k}", spectral_moment(g, i, k), float(walks),
                                  1e-6 * max(1, walks)))

    p = weight_matrix(g)
    if g.n:
        items.append(at_most("row-sums", f"n={g.n}", float(np.abs(p.row_sums() - 1).max()), 0.0, 1e-9))
        items.append(at_most("column-sums", f"n={g.n}", float(np.abs(p.column_sums() - 1).max()), 0.0, 1e-9))
    e = vertex_energies(g)
    items.append(close_to("energy-sum", f"n={g.n}", float(e.sum()), graph_energy(g), 1e-8 * max(1, g.n)))
    items.append(at_least("energy-nonnegative", f"n={g.n}", float(e.min()) if g.n else 0.0, 0.0, 0.0))
    return VerificationReport(statement="spectral moments", items=items, metadata={"n": g.n, "k_max": k_max})


def check_star_closed_forms(n_max: int = 50) -> VerificationReport:
    """S_{n+1}: center sqrt(n), leaf 1/sqrt(n), total 2 sqrt(n)."""
    items: List[CheckRecord] = []
    for n in range(1, n_max + 1):
        star = star_graph(n + 1)
        e = vertex_energies(star)
        items.append(close_to("star-center", f"n={n}", float(e[0]), math.sqrt(n), 1e-9))
        items.append(close_to("star-leaf", f"n={n}", float(e[1]), 1 / math.sqrt(n), 1e-9))
        items.append(close_to("star-total", f"n={n}", graph_energy(star), 2 * math.sqrt(n), 1e-8))
    return VerificationReport(statement="star closed forms", items=items, metadata={"n_max": n_max})


def check_coulson_agreement(
    g: Graph,
    cfg: Optional[QuadratureConfig] = None,
    tol: Optional[float] = None,
) -> VerificationReport:
    """Quadrature and eigendecomposition give the same vertex energies."""
    tol = tol or settings.coulson_agreement_tol
    spectral = vertex_energies(g)
    items = [
        close_to("coulson-agreement", f"i={i}", coulson_vertex_energy(g, i, cfg), float(spectral[i]),
                 max(tol, tol * float(spectral[i])))
        for i in range(g.n)
    ]
    return VerificationReport(statement="coulson agreement", items=items, metadata={"n": g.n})
