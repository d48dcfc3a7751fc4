"""
The family H_{n,d}: K2 with n copies of the star S_{d+2} coalesced, each at
a leaf, onto the same endpoint v. The other endpoint is u.

Its characteristic polynomial, spectrum and the weights of u are known in
closed form:

    phi(x) = x^{n(d-1)} (x^2 - d)^{n-1} (x^4 - (n+d+1) x^2 + d)

With s = n+d+1 and D = sqrt(s^2 - 4d), the quartic factor has roots
+-sqrt(L), +-sqrt(S) for L, S = (s +- D) / 2, and u carries weight
(D - n - d + 1) / (4D) on each of +-sqrt(L), (D + n + d - 1) / (4D) on each
of +-sqrt(S) and nothing on 0 or +-sqrt(d).
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.algebra.charpoly import char_poly
from src.algebra.polynomial import IntPolynomial
from src.errors import GraphError
from src.graphs.core import Graph, is_tree, path_graph, star_graph
from src.models.schemas import CheckRecord, VerificationReport
from src.spectral.energy import aggregate_weights, vertex_energies, weight_on
from src.theorems.base import at_most, close_to, exact, resolve_epsilon, strictly
from src.theorems.successive import successive_graphs


logger = logging.getLogger(__name__)

HND_V = 0
HND_U = 1
_FORMULA_TOL = 1e-8
_ZERO_WEIGHT_TOL = 1e-9


@dataclass(frozen=True)
class HndInstance:
    n: int
    d: int
    graph: Graph
    v: int = HND_V
    u: int = HND_U

    @property
    def order(self) -> int:
        return 2 + self.n * (self.d + 1)


def _star_schedule(degrees: Sequence[int]) -> List[Tuple[Graph, int]]:
    """S_{d+2} merged at leaf 1 for every d."""
    return [(star_graph(d + 2), 1) for d in degrees]


def build_star_chain(degrees: Sequence[int]) -> Graph:
    """K2 (v = 0, u = 1) after coalescing S_{d_i + 2} at a leaf onto v, in order."""
    for d in degrees:
        if d < 1:
            raise GraphError(f"star parameter must be positive, got {d}")
    return successive_graphs(path_graph(2), HND_V, _star_schedule(degrees))[-1]


def hnd_build(n: int, d: int) -> HndInstance:
    if n < 1 or d < 1:
        raise GraphError(f"H_(n,d) needs n, d >= 1, got n={n}, d={d}")
    inst = HndInstance(n=n, d=d, graph=build_star_chain([d] * n))
    if inst.graph.n != inst.order or not is_tree(inst.graph):
        raise GraphError(f"H_({n},{d}) construction produced {inst.graph}")
    return inst


# ================== Closed forms ==================

def hnd_char_poly(n: int, d: int) -> IntPolynomial:
    quartic = IntPolynomial((d, 0, -(n + d + 1), 0, 1))
    return IntPolynomial((-d, 0, 1)) ** (n - 1) * quartic.shift(n * (d - 1))


def hnd_quartic_roots(n: int, d: int) -> Tuple[float, float]:
    """(L, S): the squared eigenvalues from the quartic factor, L > S."""
    s = n + d + 1
    disc = math.sqrt(s * s - 4 * d)
    return (s + disc) / 2, (s - disc) / 2


def hnd_weights(n: int, d: int) -> Tuple[float, float]:
    """Weight of u on each of +-sqrt(L) and on each of +-sqrt(S)."""
    disc = math.sqrt((n + d + 1) ** 2 - 4 * d)
    return (disc - n - d + 1) / (4 * disc), (disc + n + d - 1) / (4 * disc)


def hnd_energy_u(n: int, d: int) -> float:
    """
    E_{H_{n,d}}(u) in closed form.

    Equals 2 p_L sqrt(L) + 2 p_S sqrt(S), simplified with sqrt(L S) = sqrt(d).
    """
    s = n + d + 1
    disc = math.sqrt(s * s - 4 * d)
    rd = math.sqrt(d)
    numerator = disc * (rd + 1) + n + 1 - d + rd * (n + d - 1)
    return numerator / (math.sqrt(2) * disc * math.sqrt(disc + s))


def hnd_verify(inst: HndInstance, epsilon: Optional[float] = None) -> VerificationReport:
    """Polynomial, energy and weight closed forms against the built graph."""
    n, d = inst.n, inst.d
    tag = f"n={n} d={d}"
    items: List[CheckRecord] = []

    observed_poly = char_poly(inst.graph)
    expected_poly = hnd_char_poly(n, d)
    items.append(exact(
        "hnd-charpoly", tag, observed_poly == expected_poly,
        "" if observed_poly == expected_poly else f"{observed_poly} != {expected_poly}",
    ))

    energy = float(vertex_energies(inst.graph)[inst.u])
    items.append(close_to("hnd-energy-u", tag, energy, hnd_energy_u(n, d), _FORMULA_TOL))

    clusters = aggregate_weights(inst.graph, inst.u)
    big, small = hnd_quartic_roots(n, d)
    p_big, p_small = hnd_weights(n, d)
    for sign in (1, -1):
        label = "+" if sign > 0 else "-"
        items.append(close_to("hnd-weight-L", f"{tag} {label}sqrt(L)",
                              weight_on(clusters, sign * math.sqrt(big)), p_big, _FORMULA_TOL))
        items.append(close_to("hnd-weight-S", f"{tag} {label}sqrt(S)",
                              weight_on(clusters, sign * math.sqrt(small)), p_small, _FORMULA_TOL))

    null_weight = sum(weight_on(clusters, x) for x in {0.0, math.sqrt(d), -math.sqrt(d)})
    items.append(at_most("hnd-weight-null", tag, null_weight, 0.0, _ZERO_WEIGHT_TOL, "0 and +-sqrt(d)"))

    report = VerificationReport(statement="H_(n,d) closed forms", items=items, metadata={"n": n, "d": d})
    if report.violations:
        logger.error(f"H_({n},{d}) closed forms: {report.violations} mismatches")
    return report


# ================== Star chains with varying degrees ==================

def series_bound_check(d_seq: Sequence[int], epsilon: Optional[float] = None) -> VerificationReport:
    """E_{G_k}(v) <= 1 + sum_{i<=k} 1/sqrt(d_i + 1) at every prefix k."""
    epsilon = resolve_epsilon(epsilon)
    d_seq = [int(d) for d in d_seq]
    if not d_seq:
        raise GraphError("degree sequence must be non-empty")
    for d in d_seq:
        if d < 1:
            raise GraphError(f"star parameter must be positive, got {d}")

    graphs = successive_graphs(path_graph(2), HND_V, _star_schedule(d_seq))
    items: List[CheckRecord] = []
    bound = 1.0
    for k, g in enumerate(graphs):
        if k:
            bound += 1 / math.sqrt(d_seq[k - 1] + 1)
        items.append(at_most("series-bound", f"k={k}", float(vertex_energies(g)[HND_V]), bound, epsilon))

    return VerificationReport(statement="series bound", items=items, metadata={"d_seq": d_seq})


def check_hnd_domination(d_seq: Sequence[int], epsilon: Optional[float] = None) -> VerificationReport:
    """
    Against H_{n,max d}: E_{G_n}(v) >= E_H(v) and E_{G_n}(u) <= E_H(u),
    strictly when the degrees are not all equal.
    """
    epsilon = resolve_epsilon(epsilon)
    d_seq = [int(d) for d in d_seq]
    if not d_seq:
        raise GraphError("degree sequence must be non-empty")
    n, d_max = len(d_seq), max(d_seq)
    g = build_star_chain(d_seq)
    h = hnd_build(n, d_max)
    e_g, e_h = vertex_energies(g), vertex_energies(h.graph)
    tag = f"n={n} d={d_max}"

    if len(set(d_seq)) > 1:
        items = [
            strictly("hnd-domination-v", tag, float(e_h[HND_V]), float(e_g[HND_V]), epsilon),
            strictly("hnd-domination-u", tag, float(e_g[HND_U]), float(e_h[HND_U]), epsilon),
        ]
    else:
        items = [
            close_to("hnd-domination-v", tag, float(e_g[HND_V]), float(e_h[HND_V]), epsilon, "constant degrees"),
            close_to("hnd-domination-u", tag, float(e_g[HND_U]), float(e_h[HND_U]), epsilon, "constant degrees"),
        ]
    return VerificationReport(statement="H_(n,d) domination", items=items, metadata={"d_seq": d_seq})
