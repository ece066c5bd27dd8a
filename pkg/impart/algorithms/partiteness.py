"""
Bipartiteness, k-partiteness and chromatic number.

The chromatic number uses inclusion-exclusion over vertex subsets: with i(S) the
number of independent sets inside S, G is k-colourable iff

    Σ_{S ⊆ V} (-1)^{|V∖S|} i(S)^k > 0

The i(S) table is filled in numpy blocks, one block per highest vertex v:
i(S ∪ {v}) = i(S) + i(S ∖ N(v)) for every S below v. The signed sums are taken in
Python integers so they never overflow.
"""

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import CHROMATIC_MAX_VERTICES
from ..exceptions import CeilingExceededError, InvalidDecompositionError
from .decompositions import TreeDecomposition, validate_tree_decomposition
from .graph import Graph, induced_subgraph

logger = logging.getLogger(__name__)

# Pairwise coprime moduli below 2^31 for the exact all-subsets colourability table
_MODULI = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
    2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
)

# log2 of the block size used when splitting the i(S) table by sign
_SIGN_BLOCK_BITS = 20


@dataclass(frozen=True)
class ColoringWitness:
    """
    Proper colouring: colors[v] in 0..k-1 for every vertex v.

    Attributes:
        colors: Colour per vertex
        k: Number of colours available
    """

    colors: Tuple[int, ...]
    k: int

    def is_proper(self, graph: Graph) -> bool:
        if len(self.colors) != graph.n:
            return False
        if any(not 0 <= c < self.k for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in graph.edges)

    def color_classes(self) -> List[Tuple[int, ...]]:
        """Vertices of each colour, colour 0 first (classes may be empty)."""
        classes: List[List[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            classes[c].append(v)
        return [tuple(c) for c in classes]


def _check_ceiling(graph: Graph) -> None:
    if graph.n > CHROMATIC_MAX_VERTICES:
        raise CeilingExceededError("chromatic_number", graph.n, CHROMATIC_MAX_VERTICES)


def is_bipartite(graph: Graph) -> Optional[ColoringWitness]:
    """
    Two-colour G by depth-first search.

    Returns:
        A 2-colouring when G is bipartite, otherwise None. Each component's
        lowest vertex gets colour 0.

    Example:
        >>> is_bipartite(new_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])).colors
        (0, 1, 0, 1)
    """
    colors = [-1] * graph.n
    for root in range(graph.n):
        if colors[root] != -1:
            continue
        colors[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in graph.adjacency[u]:
                if colors[w] == -1:
                    colors[w] = 1 - colors[u]
                    stack.append(w)
                elif colors[w] == colors[u]:
                    return None
    return ColoringWitness(tuple(colors), 2)


def independent_set_counts(graph: Graph) -> np.ndarray:
    """
    Table of i(S) for every vertex subset S (indexed by bitmask), empty set included.

    Entries are int32 (i(S) <= 2^n <= 2^30 under the ceiling), so the table
    takes 4 * 2^n bytes: 4 GiB at the ceiling.

    Example:
        >>> independent_set_counts(new_graph(2, [(0, 1)])).tolist()
        [1, 2, 2, 3]
    """
    _check_ceiling(graph)
    counts = np.ones(1 << graph.n, dtype=np.int32)
    for v in range(graph.n):
        low = np.arange(1 << v, dtype=np.int64)
        outside = ((1 << v) - 1) & ~graph.masks[v]
        counts[1 << v : 1 << (v + 1)] = counts[low] + counts[low & outside]
    return counts


def _subset_parity(n: int) -> np.ndarray:
    parity = np.zeros(1 << n, dtype=np.int8)
    for v in range(n):
        parity[1 << v : 1 << (v + 1)] = 1 - parity[: 1 << v]
    return parity


def _signed_classes(graph: Graph) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """
    (value, multiplicity) pairs of i(S) split by the sign (-1)^{|V∖S|}.

    The table is walked in blocks of 2^_SIGN_BLOCK_BITS subsets, so the sign
    masks and sorted copies never grow past one block.
    """
    counts = independent_set_counts(graph)
    n = graph.n
    width = min(n, _SIGN_BLOCK_BITS)
    low_parity = _subset_parity(width)
    tallies = (Counter(), Counter())
    for start in range(0, 1 << n, 1 << width):
        positive = (low_parity ^ (bin(start).count("1") & 1)) == n % 2
        block = counts[start : start + (1 << width)]
        for tally, selector in zip(tallies, (positive, ~positive)):
            values, multiplicity = np.unique(block[selector], return_counts=True)
            tally.update(dict(zip(values.tolist(), multiplicity.tolist())))
    return sorted(tallies[0].items()), sorted(tallies[1].items())


def _covering_count(
    positive: Sequence[Tuple[int, int]], negative: Sequence[Tuple[int, int]], k: int
) -> int:
    """Number of ordered k-tuples of independent sets whose union is V."""
    total = sum(m * v**k for v, m in positive) - sum(m * v**k for v, m in negative)
    assert total >= 0, "inclusion-exclusion count went negative"
    return total


@lru_cache(maxsize=1 << 16)
def chromatic_number(graph: Graph) -> int:
    """
    Exact chromatic number χ(G) by inclusion-exclusion.

    Returns:
        0 for the empty graph, 1 for an edgeless graph, 2 for any other
        bipartite graph, otherwise the least k with a positive covering count.

    Raises:
        CeilingExceededError: n above CHROMATIC_MAX_VERTICES

    Example:
        >>> chromatic_number(complete_multipartite(2, 4)[0])
        4
    """
    _check_ceiling(graph)
    if graph.n == 0:
        return 0
    if not graph.edges:
        return 1
    if is_bipartite(graph) is not None:
        return 2

    positive, negative = _signed_classes(graph)
    for k in range(3, graph.n + 1):
        if _covering_count(positive, negative, k) > 0:
            return k
    return graph.n


def is_colorable(graph: Graph, k: int) -> bool:
    return chromatic_number(graph) <= k


def _merge_into_one(graph: Graph, group: Sequence[int]) -> Graph:
    """Identify the (independent) vertices of `group` into a single vertex."""
    representative = group[0]
    absorbed = set(group[1:])
    kept = [v for v in range(graph.n) if v not in absorbed]
    index = {v: i for i, v in enumerate(kept)}
    for v in absorbed:
        index[v] = index[representative]
    edges = {tuple(sorted((index[u], index[v]))) for u, v in graph.edges}
    return Graph(len(kept), tuple(edges))


def _peel_color_class(graph: Graph, budget: int) -> List[int]:
    """
    One colour class of some budget-colouring of G, grown greedily from vertex 0.

    G must be budget-colourable. A vertex joins the class only if G with the
    enlarged class contracted to one vertex is still budget-colourable, so the
    class always extends to a full colouring.
    """
    members = [0]
    for v in range(1, graph.n):
        if any(graph.has_edge(v, u) for u in members):
            continue
        if is_colorable(_merge_into_one(graph, members + [v]), budget):
            members.append(v)
    return members


def is_k_partite(graph: Graph, k: int) -> Optional[ColoringWitness]:
    """
    Decide χ(G) ≤ k and recover a k-colouring by peeling colour classes.

    Args:
        graph: Input graph
        k: Number of parts (parts may be empty)

    Returns:
        A proper k-colouring, or None when χ(G) > k.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not is_colorable(graph, k):
        return None

    colors = [0] * graph.n
    remaining = list(range(graph.n))
    color = 0
    while remaining:
        sub = induced_subgraph(graph, remaining)
        chosen = set(_peel_color_class(sub, k - color))
        for i in chosen:
            colors[remaining[i]] = color
        remaining = [v for i, v in enumerate(remaining) if i not in chosen]
        color += 1
    return ColoringWitness(tuple(colors), k)


def k_colorable_subsets(graph: Graph, k: int) -> np.ndarray:
    """
    Boolean table over all vertex subsets: entry S is True iff G[S] is k-colourable.

    The covering count of every G[S] at once is the subset Möbius transform of
    i(S)^k. It is computed modulo several primes; since the true count is below
    2^(n*k) and the product of the primes exceeds that, a count that vanishes
    modulo all of them is zero.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    n = graph.n
    if k >= n:
        return np.ones(1 << n, dtype=bool)

    needed = math.ceil((n * k + 1) / 30)
    if needed > len(_MODULI):
        raise CeilingExceededError("k_colorable_subsets", n * k, 30 * len(_MODULI) - 1)

    counts = independent_set_counts(graph)
    colorable = np.zeros(1 << n, dtype=bool)
    for p in _MODULI[:needed]:
        base = counts.astype(np.int64) % p
        power = np.ones_like(base)
        for _ in range(k):
            power = (power * base) % p
        for j in range(n):
            view = power.reshape(-1, 2, 1 << j)
            view[:, 1, :] -= view[:, 0, :]
            view[:, 1, :] %= p
        colorable |= power != 0
    return colorable


# ---------------------------------------------------------------------------
# Colouring over a tree decomposition
# ---------------------------------------------------------------------------


def _post_order(decomposition: TreeDecomposition) -> Tuple[List[int], Dict[int, int]]:
    tree = decomposition.tree()
    parent = {0: -1}
    order = []
    stack = [0]
    while stack:
        node = stack.pop()
        order.append(node)
        for child in sorted(tree.neighbors(node)):
            if child not in parent:
                parent[child] = node
                stack.append(child)
    order.reverse()
    return order, parent


def is_k_partite_via_decomposition(
    graph: Graph, decomposition: TreeDecomposition, k: int
) -> Optional[ColoringWitness]:
    """
    k-colouring by dynamic programming over a tree decomposition.

    For each bag (children before parents) the table keeps the proper
    colourings of the bag that agree, on shared vertices, with some surviving
    colouring of every child bag. Runs in O(k^(w+1)) per bag for width w.

    Raises:
        InvalidDecompositionError: decomposition is not valid for G
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not validate_tree_decomposition(graph, decomposition):
        raise InvalidDecompositionError("tree decomposition is not valid for the graph")

    bags = decomposition.bags
    order, parent = _post_order(decomposition)
    children: Dict[int, List[int]] = {node: [] for node in order}
    for node in order:
        if parent[node] >= 0:
            children[parent[node]].append(node)

    # tables[node] maps a bag colouring to the child colourings it was built from
    tables: Dict[int, Dict[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]] = {}
    for node in order:
        bag = bags[node]
        position = {v: i for i, v in enumerate(bag)}
        inner = [(position[u], position[v]) for u, v in graph.edges if u in position and v in position]

        child_views = []
        for child in children[node]:
            shared = [v for v in bags[child] if v in position]
            child_pos = {v: i for i, v in enumerate(bags[child])}
            lookup: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
            for coloring in tables[child]:
                key = tuple(coloring[child_pos[v]] for v in shared)
                lookup.setdefault(key, coloring)
            child_views.append(([position[v] for v in shared], lookup))

        table = {}
        for coloring in itertools.product(range(k), repeat=len(bag)):
            if any(coloring[a] == coloring[b] for a, b in inner):
                continue
            picks = []
            for indices, lookup in child_views:
                pick = lookup.get(tuple(coloring[i] for i in indices))
                if pick is None:
                    break
                picks.append(pick)
            else:
                table[coloring] = tuple(picks)
        if not table:
            logger.debug("no %d-colouring survives at bag %d", k, node)
            return None
        tables[node] = table

    colors = [0] * graph.n
    pending = [(0, next(iter(tables[0])))]
    while pending:
        node, coloring = pending.pop()
        for v, c in zip(bags[node], coloring):
            colors[v] = c
        pending.extend(zip(children[node], tables[node][coloring]))
    return ColoringWitness(tuple(colors), k)
