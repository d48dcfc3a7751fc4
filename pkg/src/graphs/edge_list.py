"""
Edge-list document reader.

Format: optional '#' comment lines and blank lines; first data line "n m";
then m lines "u v" with 0 <= u, v < n and u != v. Duplicate pairs are rejected.
"""
import logging
from pathlib import Path
from typing import List, Set, Tuple, Union

from src.errors import EdgeListParseError
from src.graphs.core import Edge, Graph, canonical_edge


logger = logging.getLogger(__name__)


def _data_lines(text: str) -> List[Tuple[int, List[str]]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    return rows


def _ints(tokens: List[str], lineno: int) -> Tuple[int, int]:
    if len(tokens) != 2:
        raise EdgeListParseError(f"expected two integers, got {len(tokens)} tokens", lineno)
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise EdgeListParseError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def from_edge_list(text: str) -> Graph:
    rows = _data_lines(text)
    if not rows:
        raise EdgeListParseError("empty document: missing 'n m' header")

    header_line, header = rows[0]
    n, m = _ints(header, header_line)
    if n < 0 or m < 0:
        raise EdgeListParseError("vertex and edge counts must be non-negative", header_line)

    body = rows[1:]
    if len(body) != m:
        raise EdgeListParseError(f"header declares {m} edges but {len(body)} edge lines follow")

    edges: Set[Edge] = set()
    for lineno, tokens in body:
        u, v = _ints(tokens, lineno)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex index out of range in ({u}, {v}) for n={n}", lineno)
        e = canonical_edge(u, v)
        if e in edges:
            raise EdgeListParseError(f"duplicate edge {e}", lineno)
        edges.add(e)

    graph = Graph(n, frozenset(edges))
    logger.debug(f"Parsed edge list: {graph}")
    return graph


def read_edge_list(path: Union[str, Path]) -> Graph:
    with open(path, "r", encoding="utf-8") as f:
        return from_edge_list(f.read())
