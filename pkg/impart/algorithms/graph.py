"""
Immutable simple undirected graphs with contiguous vertex ids.

Every graph in impart is a Graph on vertices 0..n-1. Construction normalises the
edge list (pairs stored as u < v, duplicates collapsed, sorted) so that two graphs
with the same edge set compare and hash equal, which lets the exponential
routines memoise on graphs directly.

Vertex subsets are plain sorted tuples (VertexSet); the exponential routines work
on the bitmask form (bit v set iff v is a member) for speed.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..exceptions import InvalidGraphError

Edge = Tuple[int, int]
VertexSet = Tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Attributes:
        n: Vertex count (the order |G|)
        edges: Sorted tuple of pairs (u, v) with u < v
        adjacency: Sorted neighbour tuple per vertex (derived)
        masks: Neighbourhood bitmask per vertex (derived)
    """

    n: int
    edges: Tuple[Edge, ...] = ()
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = int(self.n)
        if n < 0:
            raise InvalidGraphError(f"vertex count must be non-negative, got {n}")

        canonical = set()
        for pair in self.edges:
            try:
                u, v = (int(x) for x in pair)
            except (TypeError, ValueError) as exc:
                raise InvalidGraphError(f"edge {pair!r} is not a vertex pair") from exc
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            canonical.add((u, v) if u < v else (v, u))

        edges = tuple(sorted(canonical))
        neighbours: List[List[int]] = [[] for _ in range(n)]
        for u, v in edges:
            neighbours[u].append(v)
            neighbours[v].append(u)

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in neighbours))
        object.__setattr__(
            self, "masks", tuple(sum(1 << w for w in a) for a in neighbours)
        )

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class Partition:
    """Ordered list of vertex parts, e.g. the k parts of a k-partite graph."""

    parts: Tuple[VertexSet, ...]

    @property
    def k(self) -> int:
        return len(self.parts)

    def is_valid_for(self, graph: Graph, covering: Optional[Iterable[int]] = None) -> bool:
        """
        Check the partition invariants against a graph.

        Parts must be pairwise disjoint, their union must equal `covering`
        (all of V(G) by default), and every edge of G inside the covered set
        must join two distinct parts.
        """
        owner = {}
        for index, part in enumerate(self.parts):
            for v in part:
                if v in owner or not 0 <= v < graph.n:
                    return False
                owner[v] = index

        target = set(range(graph.n)) if covering is None else set(covering)
        if set(owner) != target:
            return False

        return all(
            owner[u] != owner[v]
            for u, v in graph.edges
            if u in owner and v in owner
        )


# ---------------------------------------------------------------------------
# Vertex sets and bitmasks
# ---------------------------------------------------------------------------


def vertex_set(members: Iterable[int], n: int) -> VertexSet:
    """Return the canonical (sorted, duplicate-free) vertex set, checking 0 <= v < n."""
    result = sorted({int(v) for v in members})
    if result and (result[0] < 0 or result[-1] >= n):
        raise InvalidGraphError(f"vertex set {result} is not contained in 0..{n - 1}")
    return tuple(result)


def vertex_mask(members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def mask_members(mask: int) -> List[int]:
    """Members of a bitmask in ascending order."""
    members = []
    while mask:
        low = mask & -mask
        members.append(low.bit_length() - 1)
        mask ^= low
    return members


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def new_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """
    Build a canonical graph from a vertex count and a list of vertex pairs.

    Example:
        >>> new_graph(4, [(0, 1), (1, 0), (2, 3)]).size
        2
    """
    return Graph(n, tuple(tuple(e) for e in edges))


def induced_subgraph(graph: Graph, members: Iterable[int]) -> Graph:
    """
    Return G[S] with the members of S relabelled 0..|S|-1 in ascending order.

    An edge is present iff both endpoints are in S and adjacent in G.
    """
    kept = vertex_set(members, graph.n)
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v])
        for u, v in graph.edges
        if u in index and v in index
    ]
    return Graph(len(kept), tuple(edges))


def delete_vertices(graph: Graph, members: Iterable[int]) -> Graph:
    """Return G∖S, i.e. the induced subgraph on V(G)∖S."""
    removed = set(vertex_set(members, graph.n))
    return induced_subgraph(graph, (v for v in range(graph.n) if v not in removed))


def complete_multipartite(n: int, k: int) -> Tuple[Graph, Partition]:
    """
    Build K_{n|k}: k parts of n vertices each, an edge between every two parts.

    Vertex v lies in part v // n. Returns the graph together with its partition.

    Example:
        >>> graph, _ = complete_multipartite(3, 2)   # K_{3,3}
        >>> graph.order, graph.size
        (6, 9)
    """
    if n < 1 or k < 1:
        raise InvalidGraphError(f"K_(n|k) needs n >= 1 and k >= 1, got n={n}, k={k}")

    total = n * k
    edges = [
        (u, v)
        for u in range(total)
        for v in range(u + 1, total)
        if u // n != v // n
    ]
    parts = tuple(tuple(range(p * n, (p + 1) * n)) for p in range(k))
    return Graph(total, tuple(edges)), Partition(parts)


def lex_product_with_complete(graph: Graph, k: int) -> Tuple[Graph, List[VertexSet]]:
    """
    Build G_k = K_k · G: k disjoint copies of G plus every edge between two copies.

    Copy i occupies vertices i*|G| .. (i+1)*|G| - 1, vertex v of G becoming
    i*|G| + v. Returns the product and the k copy blocks.
    """
    if k < 2:
        raise ValueError(f"lexicographic product needs k >= 2, got {k}")

    order = graph.n
    total = k * order
    edges = []
    for copy in range(k):
        offset = copy * order
        edges.extend((offset + u, offset + v) for u, v in graph.edges)
    for u in range(total):
        for v in range(u + 1, total):
            if u // order != v // order:
                edges.append((u, v))

    blocks = [tuple(range(c * order, (c + 1) * order)) for c in range(k)]
    return Graph(total, tuple(edges)), blocks


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """G ⊎ H with the vertices of H shifted by |G|."""
    shift = first.n
    edges = list(first.edges) + [(u + shift, v + shift) for u, v in second.edges]
    return Graph(first.n + second.n, tuple(edges))


# ---------------------------------------------------------------------------
# Structure queries and conversions
# ---------------------------------------------------------------------------


def adjacency_matrix(graph: Graph) -> csr_matrix:
    """Symmetric 0/1 adjacency matrix in CSR form."""
    if not graph.edges:
        return csr_matrix((graph.n, graph.n), dtype=np.int32)
    u, v = np.array(graph.edges, dtype=np.int64).T
    rows = np.concatenate([u, v])
    cols = np.concatenate([v, u])
    data = np.ones(rows.shape[0], dtype=np.int32)
    return csr_matrix((data, (rows, cols)), shape=(graph.n, graph.n))


def is_connected(graph: Graph) -> bool:
    """True iff G has at most one vertex or a single connected component."""
    if graph.n <= 1:
        return True
    count, _ = connected_components(adjacency_matrix(graph), directed=False)
    return count == 1


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges)
    return result


def from_networkx(source: nx.Graph) -> Graph:
    """Convert a networkx graph, relabelling its nodes 0..n-1 in sorted order."""
    nodes = sorted(source.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), tuple((index[u], index[v]) for u, v in source.edges()))
