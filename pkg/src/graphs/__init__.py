# Graph core: representation, builders, structural queries, coalescence, generators

from .core import (
    Edge,
    Graph,
    CoalescenceResult,
    Bipartition,
    VertexDeletion,
    canonical_edge,
    path_graph,
    star_graph,
    cycle_graph,
    complete_graph,
    coalesce,
    disjoint_union,
    delete_vertices,
    delete_edges,
    induced_subgraph,
    distance,
    distances_from,
    components,
    component_of,
    component_count,
    is_connected,
    is_tree,
    bipartition,
    is_bipartite,
    tree_path,
    bridges,
    is_edge_cut,
    cut_edges,
    cycles_through_edge,
    to_edge_list,
    relabel,
)
from .edge_list import from_edge_list, read_edge_list
from .generators import instance_rng, make_rng, random_bipartite, random_graph, random_tree

__all__ = [
    "Edge",
    "Graph",
    "CoalescenceResult",
    "Bipartition",
    "VertexDeletion",
    "canonical_edge",
    "path_graph",
    "star_graph",
    "cycle_graph",
    "complete_graph",
    "coalesce",
    "disjoint_union",
    "delete_vertices",
    "delete_edges",
    "induced_subgraph",
    "distance",
    "distances_from",
    "components",
    "component_of",
    "component_count",
    "is_connected",
    "is_tree",
    "bipartition",
    "is_bipartite",
    "tree_path",
    "bridges",
    "is_edge_cut",
    "cut_edges",
    "cycles_through_edge",
    "to_edge_list",
    "relabel",
    "from_edge_list",
    "read_edge_list",
    "instance_rng",
    "make_rng",
    "random_bipartite",
    "random_graph",
    "random_tree",
]
