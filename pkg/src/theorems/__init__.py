# Verification of vertex-energy statements on exact and random instances

from .base import classify, parity_direction, inverse, resolve_epsilon
from .alternation import check_alternation, check_edge_deletion, check_bridge_path_alternation
from .quasi_order import check_lemma31, check_deletion_order, check_union_order
from .subadditivity import check_subadditivity_vertex, check_energy_subadditivity, check_edge_cut_energy
from .successive import (
    successive_graphs,
    run_successive,
    star_coalescence,
    star_limit_sweep,
    star_sweep_rows,
)
from .hnd import (
    HND_U,
    HND_V,
    HndInstance,
    build_star_chain,
    hnd_build,
    hnd_char_poly,
    hnd_quartic_roots,
    hnd_weights,
    hnd_energy_u,
    hnd_verify,
    series_bound_check,
    check_hnd_domination,
)
from .structural import (
    check_balance,
    check_adjacent_product,
    check_identities,
    check_edge_recursion,
    check_moments,
    check_star_closed_forms,
    check_coulson_agreement,
)
from .suites import SuiteDefinition, SuiteRunner, run_suite

__all__ = [
    "classify",
    "parity_direction",
    "inverse",
    "resolve_epsilon",
    "check_alternation",
    "check_edge_deletion",
    "check_bridge_path_alternation",
    "check_lemma31",
    "check_deletion_order",
    "check_union_order",
    "check_subadditivity_vertex",
    "check_energy_subadditivity",
    "check_edge_cut_energy",
    "successive_graphs",
    "run_successive",
    "star_coalescence",
    "star_limit_sweep",
    "star_sweep_rows",
    "HND_U",
    "HND_V",
    "HndInstance",
    "build_star_chain",
    "hnd_build",
    "hnd_char_poly",
    "hnd_quartic_roots",
    "hnd_weights",
    "hnd_energy_u",
    "hnd_verify",
    "series_bound_check",
    "check_hnd_domination",
    "check_balance",
    "check_adjacent_product",
    "check_identities",
    "check_edge_recursion",
    "check_moments",
    "check_star_closed_forms",
    "check_coulson_agreement",
    "SuiteDefinition",
    "SuiteRunner",
    "run_suite",
]
