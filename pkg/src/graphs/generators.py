"""Seeded random trees and bipartite graphs for the verification harness."""
import logging
from typing import Optional, Union

import networkx as nx
import numpy as np

from src.config import settings
from src.errors import GraphError
from src.graphs.core import Graph, canonical_edge


logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.Generator, np.random.SeedSequence]


def make_rng(seed: SeedLike) -> np.random.Generator:
    """default_rng passes an existing Generator through unchanged."""
    return np.random.default_rng(seed)


def instance_rng(suite_seed: int, index: int) -> np.random.Generator:
    """Independent stream per (suite seed, instance index)."""
    return np.random.default_rng([suite_seed, index])


def random_tree(n: int, seed: SeedLike) -> Graph:
    """Uniform labelled tree on n vertices by Prüfer decoding."""
    if n < 1:
        raise GraphError(f"tree needs at least one vertex, got {n}")
    if n == 1:
        return Graph.empty(1)
    rng = make_rng(seed)
    sequence = rng.integers(0, n, size=n - 2).tolist()
    tree = nx.from_prufer_sequence(sequence)
    return Graph(n, frozenset(canonical_edge(a, b) for a, b in tree.edges()))


def random_bipartite(
    n1: int,
    n2: int,
    p: float,
    seed: SeedLike,
    max_redraws: Optional[int] = None,
) -> Graph:
    """
    Random bipartite graph with parts 0..n1-1 and n1..n1+n2-1.

    Every cross pair is an edge independently with probability p. Draws are
    repeated until vertex 0 has at least one neighbour.
    """
    if n1 < 1 or n2 < 1:
        raise GraphError(f"both parts need a vertex, got ({n1}, {n2})")
    if not 0 < p <= 1:
        raise GraphError(f"edge probability must lie in (0, 1], got {p}")
    max_redraws = max_redraws or settings.bipartite_max_redraws
    rng = make_rng(seed)

    for attempt in range(max_redraws):
        mask = rng.random((n1, n2)) < p
        if mask[0].any():
            edges = frozenset((int(i), int(n1 + j)) for i, j in zip(*np.nonzero(mask)))
            if attempt:
                logger.debug(f"random_bipartite needed {attempt + 1} draws for deg(0) >= 1")
            return Graph(n1 + n2, edges)

    raise GraphError(f"no draw with deg(0) >= 1 after {max_redraws} attempts (n2={n2}, p={p})")


def random_graph(n: int, p: float, seed: SeedLike) -> Graph:
    """G(n, p): every pair is an edge independently with probability p."""
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got {n}")
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = make_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph(n, frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(upper))))
