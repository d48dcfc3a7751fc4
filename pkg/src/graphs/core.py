"""
Immutable simple undirected graphs, named families, structural queries and coalescence.

Vertices are dense indices 0..n-1 and every edge is stored once as a
(min, max) pair. Constructions that renumber vertices return explicit
old->new maps so callers can follow a vertex through them.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from src.errors import GraphError, NotATreeError


logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1"""
    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        neighbours: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) is not stored as (min, max)")
            if v >= self.n or u < 0:
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            neighbours[u].append(v)
            neighbours[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(nb)) for nb in neighbours))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Build from unordered pairs, rejecting duplicates."""
        edges: Set[Edge] = set()
        for pair in pairs:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = canonical_edge(u, v)
            if e in edges:
                raise GraphError(f"duplicate edge {e}")
            edges.add(e)
        return cls(n, frozenset(edges))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, frozenset())

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nb) for nb in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix as float64."""
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Frozen networkx view; do not mutate."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return nx.freeze(g)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class CoalescenceResult(NamedTuple):
    """G∘H together with where each operand's vertices landed"""
    graph: Graph
    map_left: Tuple[int, ...]
    map_right: Tuple[int, ...]
    merged: int


class Bipartition(NamedTuple):
    part1: FrozenSet[int]
    part2: FrozenSet[int]


class VertexDeletion(NamedTuple):
    """Result of removing vertices; index_map covers surviving vertices only"""
    graph: Graph
    index_map: Dict[int, int]


# ================== Named families ==================

def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs at least one vertex, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def star_graph(k: int) -> Graph:
    """S_k on k vertices: vertex 0 is the center, 1..k-1 are leaves."""
    if k < 2:
        raise GraphError(f"star needs at least two vertices, got {k}")
    return Graph(k, frozenset((0, i) for i in range(1, k)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least three vertices, got {n}")
    return Graph(n, frozenset(canonical_edge(i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs at least one vertex, got {n}")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


# ================== Constructions ==================

def coalesce(g: Graph, u: int, h: Graph, v: int) -> CoalescenceResult:
    """
    Identify vertex u of g with vertex v of h.

    The merged vertex keeps index u; the vertices of h other than v are
    appended after g's vertices in their original order.
    """
    g.check_vertex(u)
    h.check_vertex(v)

    map_right: List[int] = []
    nxt = g.n
    for x in range(h.n):
        if x == v:
            map_right.append(u)
        else:
            map_right.append(nxt)
            nxt += 1

    edges = set(g.edges)
    for a, b in h.edges:
        edges.add(canonical_edge(map_right[a], map_right[b]))

    graph = Graph(g.n + h.n - 1, frozenset(edges))
    return CoalescenceResult(graph, tuple(range(g.n)), tuple(map_right), u)


def disjoint_union(*graphs: Graph) -> Tuple[Graph, Tuple[int, ...]]:
    """Place the operands side by side; returns the union and each operand's index offset."""
    offsets: List[int] = []
    edges: Set[Edge] = set()
    total = 0
    for g in graphs:
        offsets.append(total)
        edges.update((a + total, b + total) for a, b in g.edges)
        total += g.n
    return Graph(total, frozenset(edges)), tuple(offsets)


def delete_vertices(g: Graph, removed: Iterable[int]) -> VertexDeletion:
    """Induced subgraph on the remaining vertices, renumbered in order."""
    gone = set(removed)
    for v in gone:
        g.check_vertex(v)
    index_map: Dict[int, int] = {}
    for v in range(g.n):
        if v not in gone:
            index_map[v] = len(index_map)
    edges = frozenset(
        (index_map[a], index_map[b]) for a, b in g.edges if a in index_map and b in index_map
    )
    return VertexDeletion(Graph(len(index_map), edges), index_map)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> VertexDeletion:
    keep = set(vertices)
    return delete_vertices(g, (v for v in range(g.n) if v not in keep))


def delete_edges(g: Graph, removed: Iterable[Sequence[int]]) -> Graph:
    """Same vertex set without the given edges."""
    gone: Set[Edge] = set()
    for pair in removed:
        e = canonical_edge(int(pair[0]), int(pair[1]))
        if e not in g.edges:
            raise GraphError(f"edge {e} not in graph")
        gone.add(e)
    return Graph(g.n, g.edges - gone)


# ================== Structural queries ==================

def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Breadth-first shortest path length; None when v is unreachable from u."""
    g.check_vertex(u)
    g.check_vertex(v)
    try:
        return nx.shortest_path_length(g.nx_graph, u, v)
    except nx.NetworkXNoPath:
        return None


def distances_from(g: Graph, u: int) -> Dict[int, int]:
    g.check_vertex(u)
    return dict(nx.single_source_shortest_path_length(g.nx_graph, u))


def components(g: Graph) -> List[FrozenSet[int]]:
    """Connected components ordered by their lowest vertex."""
    comps = [frozenset(c) for c in nx.connected_components(g.nx_graph)]
    return sorted(comps, key=min)


def component_of(g: Graph, v: int) -> FrozenSet[int]:
    g.check_vertex(v)
    return frozenset(nx.node_connected_component(g.nx_graph, v))


def component_count(g: Graph) -> int:
    return nx.number_connected_components(g.nx_graph) if g.n else 0


def is_connected(g: Graph) -> bool:
    return g.n > 0 and component_count(g) == 1


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.m == g.n - 1 and is_connected(g)


def bipartition(g: Graph) -> Optional[Bipartition]:
    """
    Two-colouring of g, or None when g has an odd cycle.

    part1 holds the lowest-index vertex of every component.
    """
    part1: Set[int] = set()
    part2: Set[int] = set()
    for comp in components(g):
        root = min(comp)
        for x, depth in distances_from(g, root).items():
            (part2 if depth % 2 else part1).add(x)
    for a, b in g.edges:
        if (a in part1) == (b in part1):
            return None
    return Bipartition(frozenset(part1), frozenset(part2))


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def tree_path(t: Graph, u: int, v: int) -> List[int]:
    """The unique u-v path in a tree."""
    if not is_tree(t):
        raise NotATreeError(f"{t} is not a tree")
    t.check_vertex(u)
    t.check_vertex(v)
    return list(nx.shortest_path(t.nx_graph, u, v))


def bridges(g: Graph) -> FrozenSet[Edge]:
    """Edges whose removal increases the number of components."""
    return frozenset(canonical_edge(a, b) for a, b in nx.bridges(g.nx_graph))


def is_edge_cut(g: Graph, removed: Iterable[Sequence[int]]) -> bool:
    """
    True when the non-empty edge set is exactly the set of edges running
    between the parts of some vertex partition: every removed edge must
    join two different components of what remains.
    """
    removed = [canonical_edge(int(p[0]), int(p[1])) for p in removed]
    if not removed:
        return False
    rest = delete_edges(g, removed)
    label: Dict[int, int] = {}
    for k, comp in enumerate(components(rest)):
        for x in comp:
            label[x] = k
    return all(label[a] != label[b] for a, b in removed)


def cut_edges(g: Graph, side: Iterable[int]) -> List[Edge]:
    """Edges with exactly one endpoint in side, sorted."""
    s = set(side)
    return sorted(e for e in g.edges if (e[0] in s) != (e[1] in s))


def cycles_through_edge(g: Graph, e: Edge) -> List[List[int]]:
    """Vertex sequences of every cycle containing e, found as simple paths in g minus e."""
    u, v = canonical_edge(*e)
    if (u, v) not in g.edges:
        raise GraphError(f"edge {e} not in graph")
    rest = delete_edges(g, [(u, v)])
    return [list(p) for p in nx.all_simple_paths(rest.nx_graph, u, v)]


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{a} {b}" for a, b in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Image of g under the vertex map i -> permutation[i]."""
    if sorted(permutation) != list(range(g.n)):
        raise GraphError("relabelling must be a permutation of the vertices")
    return Graph(g.n, frozenset(canonical_edge(permutation[a], permutation[b]) for a, b in g.edges))
