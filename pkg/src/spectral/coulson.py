"""
Vertex energy from the Coulson-type integral

    E_G(v_i) = (1/pi) * integral over the real line of
               1 - ix * phi(G - v_i; ix) / phi(G; ix) dx

evaluated by adaptive Simpson quadrature after x = tan(theta). The real
part of the integrand is even in x, so only (0, pi/2) is integrated.
Both characteristic polynomials are exact; the common power of x is
cancelled before evaluation so that nothing is divided by a vanishing
phi(G; 0).
"""
import logging
import math
from typing import Callable, Optional, Tuple

from src.algebra.charpoly import char_poly
from src.algebra.polynomial import IntPolynomial
from src.errors import ConsistencyError, ConvergenceError
from src.graphs.core import Graph, delete_vertices, is_bipartite
from src.models.schemas import QuadratureConfig
from src.monitoring.metrics import record_quadrature


logger = logging.getLogger(__name__)

_IMAG_TOL = 1e-9
_TOL_FLOOR = 1e-15


def _reduced_pair(g: Graph, i: int) -> Tuple[IntPolynomial, IntPolynomial, int]:
    """
    (p, r, s) with 1 - x*phi(G - v_i; x) / phi(G; x) = r(x) / p(x), p(0) != 0,
    where s is the power of x cancelled from the ratio.

    The zero eigenvalue of G - v_i has multiplicity at least one less than
    in G (interlacing), so s >= 0.
    """
    phi_g = char_poly(g)
    phi_h = char_poly(delete_vertices(g, [i]).graph).shift(1)
    a = phi_g.valuation()
    b = phi_h.valuation()
    if b < a:
        raise ConsistencyError(f"zero-root multiplicities of G and G - v_{i} do not interlace on {g}")
    p = IntPolynomial(phi_g.coeffs[a:])
    q = IntPolynomial(phi_h.coeffs[b:])
    # leading terms cancel exactly here rather than in floating point
    r = p - q.shift(b - a)
    return p, r, b - a


def coulson_integrand(g: Graph, i: int) -> Callable[[float], complex]:
    """x -> 1 - ix phi(G - v_i; ix) / phi(G; ix) as a complex number."""
    g.check_vertex(i)
    p, r, _ = _reduced_pair(g, i)

    def integrand(x: float) -> complex:
        z = 1j * x
        return r.evaluate(z) / p.evaluate(z)

    return integrand


def _endpoint_limits(g: Graph, i: int) -> Tuple[float, float]:
    """Exact values of the transformed integrand at theta = 0 and theta = pi/2."""
    p, r, _ = _reduced_pair(g, i)
    at_zero = r.coefficient(0) / p.coefficient(0)
    return at_zero, float(g.degree(i))


def _simpson(f: Callable[[float], float], a: float, fa: float, b: float, fb: float) -> Tuple[float, float, float]:
    m = 0.5 * (a + b)
    fm = f(m)
    return m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(
    f: Callable[[float], float],
    a: float, fa: float,
    b: float, fb: float,
    m: float, fm: float,
    whole: float,
    tol: float,
    depth: int,
    max_depth: int,
) -> float:
    lm, flm, left = _simpson(f, a, fa, m, fm)
    rm, frm, right = _simpson(f, m, fm, b, fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth >= max_depth:
        raise ConvergenceError(f"adaptive Simpson reached depth {max_depth} on [{a:.6g}, {b:.6g}]")
    half = max(tol / 2.0, _TOL_FLOOR)
    return (
        _adaptive(f, a, fa, m, fm, lm, flm, left, half, depth + 1, max_depth)
        + _adaptive(f, m, fm, b, fb, rm, frm, right, half, depth + 1, max_depth)
    )


def coulson_vertex_energy(g: Graph, i: int, cfg: Optional[QuadratureConfig] = None) -> float:
    """Energy of vertex i by quadrature; independent of any eigendecomposition."""
    cfg = cfg or QuadratureConfig()
    integrand = coulson_integrand(g, i)
    check_imaginary = is_bipartite(g)
    at_zero, at_end = _endpoint_limits(g, i)

    def transformed(theta: float) -> float:
        x = math.tan(theta)
        value = integrand(x)
        if check_imaginary and abs(value.imag) > _IMAG_TOL * max(1.0, abs(value.real)):
            raise ConsistencyError(f"integrand of bipartite {g} has imaginary part {value.imag:.3e} at x={x:.6g}")
        return value.real * (1.0 + x * x)

    upper = 0.5 * math.pi
    panels = cfg.initial_panels
    nodes = [upper * k / panels for k in range(panels + 1)]
    values = [at_zero] + [transformed(t) for t in nodes[1:-1]] + [at_end]

    coarse = []
    for k in range(panels):
        m, fm, s = _simpson(transformed, nodes[k], values[k], nodes[k + 1], values[k + 1])
        coarse.append((m, fm, s))
    estimate = sum(s for _, _, s in coarse)
    tol = cfg.rel_tol * max(1.0, abs(estimate)) / panels

    try:
        total = sum(
            _adaptive(transformed, nodes[k], values[k], nodes[k + 1], values[k + 1], m, fm, s, tol, 1, cfg.max_depth)
            for k, (m, fm, s) in enumerate(coarse)
        )
    except ConvergenceError:
        record_quadrature("error")
        raise

    record_quadrature("success")
    energy = 2.0 / math.pi * total
    logger.debug(f"Coulson energy of vertex {i} in {g}: {energy:.12g}")
    return energy
