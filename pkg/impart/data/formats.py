"""
Graph text formats.

edgelist: first line "n m", then m lines "u v" with 0-based vertex ids.
graph6:   the standard 6-bit packed upper-triangle format used by graph corpora
          (one graph per line), encoded and decoded through networkx.
"""

from typing import List

import networkx as nx

from ..algorithms.graph import Graph, from_networkx, to_networkx
from ..exceptions import GraphFormatError, InvalidGraphError

FORMATS = ("edgelist", "graph6")


def _ints(line: str, lineno: int) -> List[int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}") from exc


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edgelist format (blank lines are ignored).

    Example:
        >>> parse_edge_list("3 2\\n0 1\\n1 2").edges
        ((0, 1), (1, 2))
    """
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise GraphFormatError("empty input: expected a header line 'n m'")

    header_no, header = lines[0]
    n, m = _ints(header, header_no)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {header_no}: n and m must be non-negative")

    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges but {len(body)} edge lines follow")

    edges = []
    for lineno, line in body:
        u, v = _ints(line, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: endpoint outside 0..{n - 1} in {line!r}")
        edges.append((u, v))

    try:
        return Graph(n, tuple(edges))
    except InvalidGraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def emit_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.size}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    """
    Decode one graph6 line (an optional >>graph6<< header is accepted).

    Raises:
        GraphFormatError: invalid character or wrong length for the announced order
    """
    stripped = line.strip()
    if not stripped:
        raise GraphFormatError("empty graph6 line")
    try:
        decoded = nx.from_graph6_bytes(stripped.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError, UnicodeEncodeError) as exc:
        raise GraphFormatError(f"invalid graph6 {stripped!r}: {exc}") from exc
    return from_networkx(decoded)


def emit_graph6(graph: Graph) -> str:
    """
    graph6 text of G without header or newline.

    Example:
        >>> emit_graph6(new_graph(2, [(0, 1)]))
        'A_'
    """
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii").strip()


def read_graph6_corpus(text: str) -> List[Graph]:
    """One graph per non-blank line."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def read_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def write_graph(graph: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return emit_edge_list(graph)
    if fmt == "graph6":
        return emit_graph6(graph) + "\n"
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
