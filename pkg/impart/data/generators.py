"""
Instance generators.

All randomness is seeded: the same (kind, seed, params) always gives the same
graph.
"""

from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional

import networkx as nx
import numpy as np

from ..algorithms.graph import Graph, complete_multipartite, from_networkx
from ..config import DEFAULT_SEED
from ..exceptions import InvalidGraphError


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidGraphError(message)


def empty_graph(n: int) -> Graph:
    _need(n >= 0, f"n must be non-negative, got {n}")
    return Graph(n)


def path_graph(n: int) -> Graph:
    _need(n >= 0, f"n must be non-negative, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    _need(n >= 3, f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    _need(n >= 0, f"n must be non-negative, got {n}")
    return Graph(n, tuple(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    _need(leaves >= 0, f"leaf count must be non-negative, got {leaves}")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    return from_networkx(nx.petersen_graph())


def gnp(n: int, p: float, seed: int = DEFAULT_SEED) -> Graph:
    """Erdős–Rényi G(n, p)."""
    _need(n >= 0, f"n must be non-negative, got {n}")
    _need(0.0 <= p <= 1.0, f"p must lie in [0, 1], got {p}")
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def max_degree4(n: int, budget: Optional[int] = None, seed: int = DEFAULT_SEED) -> Graph:
    """
    Random graph with maximum degree at most 4.

    Vertex pairs are visited in a seeded random order and an edge is kept
    while both endpoints have degree below 4, until `budget` edges (default
    2n, the most a graph with Δ <= 4 can have) are placed.
    """
    _need(n >= 0, f"n must be non-negative, got {n}")
    limit = 2 * n if budget is None else budget
    _need(limit >= 0, f"edge budget must be non-negative, got {limit}")

    pairs = list(combinations(range(n), 2))
    rng = np.random.default_rng(seed)
    degree = [0] * n
    edges = []
    for index in rng.permutation(len(pairs)).tolist():
        if len(edges) >= limit:
            break
        u, v = pairs[index]
        if degree[u] < 4 and degree[v] < 4:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1
    return Graph(n, tuple(edges))


def _complete_multipartite(n: int, k: int) -> Graph:
    return complete_multipartite(n, k)[0]


GENERATORS: Dict[str, Callable[..., Graph]] = {
    "gnp": gnp,
    "cycle": cycle_graph,
    "path": path_graph,
    "complete": complete_graph,
    "complete_multipartite": _complete_multipartite,
    "max_degree4": max_degree4,
}

_SEEDED = {"gnp", "max_degree4"}


def gen(kind: str, seed: int = DEFAULT_SEED, **params) -> Graph:
    """
    Build a graph of the given kind.

    Args:
        kind: One of gnp(n, p), cycle(n), path(n), complete(n),
            complete_multipartite(n, k), max_degree4(n, budget)
        seed: Seed for the random kinds (ignored by the others)
        **params: Keyword parameters of the kind

    Example:
        >>> gen("cycle", n=5).size
        5
    """
    if kind not in GENERATORS:
        raise ValueError(f"unknown generator {kind!r}; choose from {', '.join(GENERATORS)}")
    builder = GENERATORS[kind]
    try:
        if kind in _SEEDED:
            return builder(seed=seed, **params)
        return builder(**params)
    except TypeError as exc:
        raise InvalidGraphError(f"bad parameters for {kind}: {exc}") from exc


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices, one per edge subset."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def random_graphs(count: int, n: int, p: float = 0.5, seed: int = DEFAULT_SEED) -> List[Graph]:
    """`count` seeded G(n, p) samples."""
    seeds = np.random.default_rng(seed).integers(0, 2**31 - 1, size=count)
    return [gnp(n, p, int(s)) for s in seeds]


def atlas_graphs(n_max: int) -> List[Graph]:
    """
    One graph per isomorphism class on at most n_max vertices.

    Taken from the networkx graph atlas, which is complete up to 7 vertices.
    """
    _need(0 <= n_max <= 7, f"the graph atlas covers 0..7 vertices, got {n_max}")
    return [from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() <= n_max]
