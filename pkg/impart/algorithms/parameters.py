"""
Exact graph parameters.

Each function takes a Graph and returns a non-negative integer (plus a witness
where one is natural). Conventions on tiny graphs:
    - δ, Δ and κ need at least one vertex, λ needs two (EmptyGraphError otherwise)
    - κ(K_n) = n - 1, and κ = λ = 0 on disconnected graphs
    - α, χ′, treewidth and pathwidth of the empty graph are 0
"""

import logging
from typing import List, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from ..config import CHROMATIC_INDEX_MAX_EDGES, INDEPENDENCE_MAX_VERTICES
from ..exceptions import CeilingExceededError, EmptyGraphError
from .decompositions import (
    PathDecomposition,
    TreeDecomposition,
    pathwidth,
    treewidth,
    validate_path_decomposition,
    validate_tree_decomposition,
)
from .graph import Graph, VertexSet, adjacency_matrix, is_connected, mask_members, popcount
from .partiteness import is_bipartite

logger = logging.getLogger(__name__)

__all__ = [
    "order",
    "size",
    "min_degree",
    "max_degree",
    "vertex_connectivity",
    "edge_connectivity",
    "independence_number",
    "find_stable_set",
    "chromatic_index",
    "treewidth",
    "pathwidth",
    "validate_tree_decomposition",
    "validate_path_decomposition",
    "TreeDecomposition",
    "PathDecomposition",
]


def order(graph: Graph) -> int:
    """|G|, the number of vertices."""
    return graph.n


def size(graph: Graph) -> int:
    """‖G‖, the number of edges."""
    return len(graph.edges)


def min_degree(graph: Graph) -> int:
    if graph.n == 0:
        raise EmptyGraphError("minimum degree is undefined on the empty graph")
    return min(graph.degrees)


def max_degree(graph: Graph) -> int:
    if graph.n == 0:
        raise EmptyGraphError("maximum degree is undefined on the empty graph")
    return max(graph.degrees)


# ---------------------------------------------------------------------------
# Connectivity (Menger, via max-flow)
# ---------------------------------------------------------------------------


def _flow_value(capacity: csr_matrix, source: int, sink: int) -> int:
    return int(maximum_flow(capacity, source, sink).flow_value)


def _vertex_split_network(graph: Graph) -> csr_matrix:
    """
    Vertex x becomes x_in = 2x and x_out = 2x + 1 joined by a unit arc, so a
    maximum flow from s_out to t_in counts internally vertex-disjoint s-t paths.
    """
    n = graph.n
    rows, cols, caps = [], [], []
    for x in range(n):
        rows.append(2 * x)
        cols.append(2 * x + 1)
        caps.append(1)
    for u, v in graph.edges:
        rows.extend((2 * u + 1, 2 * v + 1))
        cols.extend((2 * v, 2 * u))
        caps.extend((n, n))
    network = csr_matrix(
        (np.array(caps, dtype=np.int32), (np.array(rows), np.array(cols))),
        shape=(2 * n, 2 * n),
    )
    network.sort_indices()
    return network


def vertex_connectivity(graph: Graph) -> int:
    """
    κ(G): fewest vertices whose removal disconnects G (n - 1 for a complete graph).

    Computed as the minimum, over non-adjacent pairs s < t, of the number of
    internally vertex-disjoint s-t paths.

    Example:
        >>> vertex_connectivity(complete_multipartite(3, 2)[0])
        3
    """
    n = graph.n
    if n == 0:
        raise EmptyGraphError("vertex connectivity is undefined on the empty graph")
    if len(graph.edges) == n * (n - 1) // 2:
        return n - 1
    if not is_connected(graph):
        return 0

    network = _vertex_split_network(graph)
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if graph.has_edge(s, t):
                continue
            best = min(best, _flow_value(network, 2 * s + 1, 2 * t))
            if best == 0:
                return 0
    return best


def edge_connectivity(graph: Graph) -> int:
    """
    λ(G): fewest edges whose removal disconnects G.

    Minimum over t ≠ 0 of the unit-capacity max-flow from vertex 0 to t.
    """
    if graph.n < 2:
        raise EmptyGraphError("edge connectivity needs at least two vertices")
    if not is_connected(graph):
        return 0

    network = adjacency_matrix(graph)
    network.sort_indices()
    return min(_flow_value(network, 0, t) for t in range(1, graph.n))


# ---------------------------------------------------------------------------
# Stable sets
# ---------------------------------------------------------------------------


def _clique_cover_size(masks: Tuple[int, ...], candidates: int) -> int:
    """Number of cliques in a greedy clique cover of the candidate set (bounds α from above)."""
    cliques = 0
    while candidates:
        v = (candidates & -candidates).bit_length() - 1
        candidates &= ~(1 << v)
        common = masks[v] & candidates
        while common:
            u = (common & -common).bit_length() - 1
            candidates &= ~(1 << u)
            common &= masks[u]
        cliques += 1
    return cliques


def independence_number(graph: Graph) -> Tuple[int, VertexSet]:
    """
    α(G) with a maximum stable set.

    Branch and bound on the lowest remaining candidate (take it, then discard
    it), pruning a branch when the chosen set plus a greedy clique cover of the
    candidates cannot beat the best set found. Taking before discarding makes
    the returned set the lexicographically smallest maximum stable set.

    Returns:
        (α(G), witness) with the witness sorted ascending.

    Raises:
        CeilingExceededError: n above INDEPENDENCE_MAX_VERTICES
    """
    if graph.n > INDEPENDENCE_MAX_VERTICES:
        raise CeilingExceededError("independence_number", graph.n, INDEPENDENCE_MAX_VERTICES)

    masks = graph.masks
    best: List[int] = []
    chosen: List[int] = []

    def search(candidates: int) -> None:
        nonlocal best
        if not candidates:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + _clique_cover_size(masks, candidates) <= len(best):
            return
        v = (candidates & -candidates).bit_length() - 1
        chosen.append(v)
        search(candidates & ~masks[v] & ~(1 << v))
        chosen.pop()
        search(candidates & ~(1 << v))

    search((1 << graph.n) - 1)
    return len(best), tuple(best)


def find_stable_set(graph: Graph, size: int) -> Optional[VertexSet]:
    """
    Look for a stable set of exactly `size` vertices.

    Bounded search: it stops at the first (lexicographically smallest) such set
    and never computes α in full.

    Returns:
        The stable set, or None if every stable set is smaller.
    """
    if size <= 0:
        return ()
    masks = graph.masks

    def extend(candidates: int, chosen: Tuple[int, ...]) -> Optional[VertexSet]:
        if len(chosen) == size:
            return chosen
        if len(chosen) + popcount(candidates) < size:
            return None
        for v in mask_members(candidates):
            above = candidates & ~((1 << (v + 1)) - 1)
            found = extend(above & ~masks[v], chosen + (v,))
            if found is not None:
                return found
        return None

    return extend((1 << graph.n) - 1, ())


# ---------------------------------------------------------------------------
# Chromatic index
# ---------------------------------------------------------------------------


def _edge_colorable(graph: Graph, colors: int) -> bool:
    """Backtracking edge colouring, most constrained edge first."""
    edges = graph.edges
    palette = (1 << colors) - 1
    used = [0] * graph.n
    uncolored = set(range(len(edges)))

    def free_colors(index: int) -> int:
        u, v = edges[index]
        return palette & ~(used[u] | used[v])

    def assign(highest: int) -> bool:
        if not uncolored:
            return True
        index = min(uncolored, key=lambda i: (popcount(free_colors(i)), i))
        free = free_colors(index)
        u, v = edges[index]
        uncolored.discard(index)
        # colours above highest + 1 are interchangeable with highest + 1
        for c in range(min(colors, highest + 2)):
            if free >> c & 1:
                used[u] |= 1 << c
                used[v] |= 1 << c
                if assign(max(highest, c)):
                    return True
                used[u] &= ~(1 << c)
                used[v] &= ~(1 << c)
        uncolored.add(index)
        return False

    return assign(-1)


def chromatic_index(graph: Graph) -> int:
    """
    χ′(G), the fewest colours in a proper edge colouring.

    By Vizing's theorem χ′ is Δ or Δ + 1; bipartite graphs are Δ (König) and
    overfull graphs (more than Δ·⌊n/2⌋ edges) are Δ + 1. Everything else is
    decided by trying to edge-colour with Δ colours.

    Example:
        >>> chromatic_index(complete_multipartite(3, 3)[0])
        7
    """
    if len(graph.edges) > CHROMATIC_INDEX_MAX_EDGES:
        raise CeilingExceededError("chromatic_index", len(graph.edges), CHROMATIC_INDEX_MAX_EDGES)
    if not graph.edges:
        return 0

    delta = max(graph.degrees)
    if is_bipartite(graph) is not None:
        return delta
    if len(graph.edges) > delta * (graph.n // 2):
        return delta + 1
    if _edge_colorable(graph, delta):
        return delta
    logger.debug("graph with %d edges is class 2 (Δ=%d)", len(graph.edges), delta)
    return delta + 1
