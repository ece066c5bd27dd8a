"""
Tree and path decompositions: validation and exact treewidth / pathwidth.

Treewidth is computed over elimination orderings: TW(S) is the best width of an
ordering that eliminates the set S first, and

    TW(S ∪ {v}) = min over v of max(TW(S), |Q(S, v)|)

where Q(S, v) is the set of vertices outside S ∪ {v} reachable from v through S.
Pathwidth uses the same subset recurrence on the vertex separation number, where
the cost of a prefix S is the number of vertices of S with a neighbour outside S.

Both DPs are run only when a cheap lower bound (minor-min-width) does not already
match the width of a heuristic ordering (min-fill for treewidth, greedy minimum
boundary for pathwidth), and states whose value reaches the heuristic width are
pruned. The result is exact either way; the heuristics only shortcut the search.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..config import PATHWIDTH_MAX_VERTICES, TREEWIDTH_MAX_VERTICES
from ..exceptions import CeilingExceededError
from .graph import Graph, VertexSet, mask_members, popcount

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeDecomposition:
    """
    Tree decomposition: bags indexed by tree nodes 0..len(bags)-1.

    Attributes:
        bags: One sorted vertex tuple per tree node
        tree_edges: Undirected edges between tree nodes
    """

    bags: Tuple[VertexSet, ...]
    tree_edges: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "bags", tuple(tuple(sorted(set(b))) for b in self.bags))
        object.__setattr__(self, "tree_edges", tuple(tuple(e) for e in self.tree_edges))

    @property
    def width(self) -> int:
        """Largest bag size minus one (0 for a decomposition of the empty graph)."""
        return max(0, max((len(b) for b in self.bags), default=1) - 1)

    def largest_bag(self) -> VertexSet:
        """First bag of maximum size."""
        return max(self.bags, key=len)

    def tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(range(len(self.bags)))
        tree.add_edges_from(self.tree_edges)
        return tree


@dataclass(frozen=True)
class PathDecomposition:
    """Path decomposition: consecutive bags form the path."""

    bags: Tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bags", tuple(tuple(sorted(set(b))) for b in self.bags))

    @property
    def width(self) -> int:
        return max(0, max((len(b) for b in self.bags), default=1) - 1)

    def largest_bag(self) -> VertexSet:
        return max(self.bags, key=len)

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = tuple((i, i + 1) for i in range(len(self.bags) - 1))
        return TreeDecomposition(self.bags, edges)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate_tree_decomposition(graph: Graph, decomposition: TreeDecomposition) -> bool:
    """
    Check the three defining properties of a tree decomposition.

    The bag graph must be a tree, every vertex of G must lie in some bag, the
    bags containing a vertex must form a connected subtree, and every edge of G
    must lie inside some bag.
    """
    bags = decomposition.bags
    if not bags:
        return False

    for a, b in decomposition.tree_edges:
        if a == b or not (0 <= a < len(bags) and 0 <= b < len(bags)):
            return False
    tree = decomposition.tree()
    if not nx.is_tree(tree):
        return False

    occurrences: Dict[int, List[int]] = defaultdict(list)
    for node, bag in enumerate(bags):
        for v in bag:
            if not 0 <= v < graph.n:
                return False
            occurrences[v].append(node)

    for v in range(graph.n):
        nodes = occurrences.get(v)
        if not nodes:
            return False
        if not nx.is_connected(tree.subgraph(nodes)):
            return False

    bag_sets = [set(bag) for bag in bags]
    return all(
        any(v in bag_sets[node] for node in occurrences[u])
        for u, v in graph.edges
    )


def validate_path_decomposition(graph: Graph, decomposition: PathDecomposition) -> bool:
    """Path version of the check: occurrences of each vertex must be consecutive."""
    bags = decomposition.bags
    if not bags:
        return False

    positions: Dict[int, List[int]] = defaultdict(list)
    for index, bag in enumerate(bags):
        for v in bag:
            if not 0 <= v < graph.n:
                return False
            positions[v].append(index)

    for v in range(graph.n):
        seen = positions.get(v)
        if not seen:
            return False
        if seen != list(range(seen[0], seen[-1] + 1)):
            return False

    bag_sets = [set(bag) for bag in bags]
    return all(
        any(v in bag_sets[i] for i in positions[u])
        for u, v in graph.edges
    )


# ---------------------------------------------------------------------------
# Bounds shared by both widths
# ---------------------------------------------------------------------------


def _adjacency_sets(graph: Graph) -> Dict[int, set]:
    return {v: set(graph.adjacency[v]) for v in range(graph.n)}


def _minor_min_width(graph: Graph) -> int:
    """Minor-min-width lower bound on treewidth (and so on pathwidth)."""
    adj = _adjacency_sets(graph)
    bound = 0
    while adj:
        degree, u = min((len(adj[x]), x) for x in adj)
        bound = max(bound, degree)
        if degree > 0:
            # contract u into the neighbour sharing the fewest neighbours with it
            _, v = min((len(adj[w] & adj[u]), w) for w in adj[u])
            for w in adj[u]:
                adj[w].discard(u)
                if w != v:
                    adj[w].add(v)
                    adj[v].add(w)
        del adj[u]
    return bound


def _fill_in(adj: Dict[int, set], u: int) -> int:
    neighbours = adj[u]
    missing = sum(len(neighbours - adj[a] - {a}) for a in neighbours)
    return missing // 2


def _min_fill_order(graph: Graph) -> Tuple[int, List[int]]:
    """Min-fill elimination ordering and its width (ties broken by lowest id)."""
    adj = _adjacency_sets(graph)
    order = []
    width = 0
    while adj:
        _, u = min((_fill_in(adj, x), x) for x in adj)
        neighbours = adj.pop(u)
        width = max(width, len(neighbours))
        for a in neighbours:
            adj[a].discard(u)
            adj[a] |= neighbours - {a}
        order.append(u)
    return width, order


# ---------------------------------------------------------------------------
# Treewidth
# ---------------------------------------------------------------------------


def _reach_through(masks: Sequence[int], inside: int, v: int) -> int:
    """Q(S, v): vertices outside S ∪ {v} reachable from v by a path whose interior lies in S."""
    seen = 1 << v
    stack = [v]
    frontier = 0
    while stack:
        x = stack.pop()
        neighbours = masks[x]
        frontier |= neighbours & ~inside
        fresh = neighbours & inside & ~seen
        seen |= fresh
        stack.extend(mask_members(fresh))
    return frontier & ~(1 << v)


def _elimination_dp(graph: Graph, upper: int) -> Optional[List[int]]:
    """Optimal elimination ordering if its width is below `upper`, else None."""
    n = graph.n
    full = (1 << n) - 1
    masks = graph.masks
    layer: Dict[int, int] = {0: -1}
    parent: Dict[int, Tuple[int, int]] = {}

    for _ in range(n):
        following: Dict[int, int] = {}
        for eliminated in sorted(layer):
            base = layer[eliminated]
            for v in mask_members(full & ~eliminated):
                value = max(base, popcount(_reach_through(masks, eliminated, v)))
                if value >= upper:
                    continue
                state = eliminated | (1 << v)
                if state not in following or value < following[state]:
                    following[state] = value
                    parent[state] = (eliminated, v)
        layer = following
        if not layer:
            return None

    logger.debug("treewidth DP reached width %d below bound %d", layer[full], upper)
    order = []
    state = full
    while state:
        state, v = parent[state]
        order.append(v)
    order.reverse()
    return order


def _decomposition_from_order(graph: Graph, order: Sequence[int]) -> TreeDecomposition:
    """
    Tree decomposition of an elimination ordering.

    Node i holds order[i] plus its later neighbours in the filled graph; its
    parent is the node of the earliest-eliminated of those neighbours. Roots of
    different components are chained so the result is a single tree.
    """
    adj = _adjacency_sets(graph)
    position = {v: i for i, v in enumerate(order)}
    bags = []
    later = []
    for v in order:
        neighbours = adj.pop(v)
        for a in neighbours:
            adj[a].discard(v)
            adj[a] |= neighbours - {a}
        bags.append(tuple(sorted(neighbours | {v})))
        later.append(neighbours)

    edges = []
    roots = []
    for i, neighbours in enumerate(later):
        if neighbours:
            edges.append((i, min(position[u] for u in neighbours)))
        else:
            roots.append(i)
    edges.extend(zip(roots, roots[1:]))
    return TreeDecomposition(tuple(bags), tuple(edges))


def _check_ceiling(routine: str, size: int, ceiling: int) -> None:
    if size > ceiling:
        raise CeilingExceededError(routine, size, ceiling)


@lru_cache(maxsize=1 << 15)
def treewidth(graph: Graph) -> Tuple[int, TreeDecomposition]:
    """
    Exact treewidth with a witness decomposition of that width.

    Returns:
        (tw(G), decomposition). The empty graph has treewidth 0 and a single
        empty bag.

    Example:
        >>> treewidth(complete_multipartite(3, 2)[0])[0]
        3
    """
    _check_ceiling("treewidth", graph.n, TREEWIDTH_MAX_VERTICES)
    if graph.n == 0:
        return 0, TreeDecomposition(((),))

    upper, order = _min_fill_order(graph)
    if _minor_min_width(graph) < upper:
        improved = _elimination_dp(graph, upper)
        if improved is not None:
            order = improved

    decomposition = _decomposition_from_order(graph, order)
    return decomposition.width, decomposition


# ---------------------------------------------------------------------------
# Pathwidth
# ---------------------------------------------------------------------------


def _boundary_size(masks: Sequence[int], prefix: int) -> int:
    return sum(1 for u in mask_members(prefix) if masks[u] & ~prefix)


def _greedy_separation_order(graph: Graph) -> Tuple[int, List[int]]:
    masks = graph.masks
    full = (1 << graph.n) - 1
    prefix = 0
    worst = 0
    order = []
    for _ in range(graph.n):
        cost, v = min(
            (_boundary_size(masks, prefix | (1 << x)), x)
            for x in mask_members(full & ~prefix)
        )
        prefix |= 1 << v
        worst = max(worst, cost)
        order.append(v)
    return worst, order


def _separation_dp(graph: Graph, upper: int) -> Optional[List[int]]:
    """Ordering of minimum vertex separation if it is below `upper`, else None."""
    n = graph.n
    full = (1 << n) - 1
    masks = graph.masks
    boundary: Dict[int, int] = {}
    layer: Dict[int, int] = {0: 0}
    parent: Dict[int, Tuple[int, int]] = {}

    for _ in range(n):
        following: Dict[int, int] = {}
        for prefix in sorted(layer):
            base = layer[prefix]
            for v in mask_members(full & ~prefix):
                state = prefix | (1 << v)
                if state not in boundary:
                    boundary[state] = _boundary_size(masks, state)
                value = max(base, boundary[state])
                if value >= upper:
                    continue
                if state not in following or value < following[state]:
                    following[state] = value
                    parent[state] = (prefix, v)
        layer = following
        if not layer:
            return None

    order = []
    state = full
    while state:
        state, v = parent[state]
        order.append(v)
    order.reverse()
    return order


def _path_decomposition_from_order(graph: Graph, order: Sequence[int]) -> PathDecomposition:
    """Bag i is order[i] plus the earlier vertices that still have a neighbour from order[i] on."""
    masks = graph.masks
    prefix = 0
    bags = []
    for v in order:
        boundary = [u for u in mask_members(prefix) if masks[u] & ~prefix]
        bags.append(tuple(sorted(boundary + [v])))
        prefix |= 1 << v
    return PathDecomposition(tuple(bags))


@lru_cache(maxsize=1 << 15)
def pathwidth(graph: Graph) -> Tuple[int, PathDecomposition]:
    """
    Exact pathwidth (= vertex separation number) with a witness path decomposition.

    Example:
        >>> pathwidth(complete_multipartite(2, 2)[0])[0]   # C4
        2
    """
    _check_ceiling("pathwidth", graph.n, PATHWIDTH_MAX_VERTICES)
    if graph.n == 0:
        return 0, PathDecomposition(((),))

    upper, order = _greedy_separation_order(graph)
    if _minor_min_width(graph) < upper:
        improved = _separation_dp(graph, upper)
        if improved is not None:
            order = improved

    decomposition = _path_decomposition_from_order(graph, order)
    return decomposition.width, decomposition


def trivial_decomposition(graph: Graph) -> TreeDecomposition:
    """One bag holding every vertex; width n - 1."""
    return TreeDecomposition((tuple(range(graph.n)),))
