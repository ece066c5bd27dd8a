"""
Test suite for tree and path decompositions.

Validation is checked on hand-built decompositions; treewidth and pathwidth are
compared against exhaustive enumeration of vertex orderings on small graphs.
"""

import itertools

import pytest

from impart.algorithms.decompositions import (
    PathDecomposition,
    TreeDecomposition,
    pathwidth,
    treewidth,
    trivial_decomposition,
    validate_path_decomposition,
    validate_tree_decomposition,
)
from impart.algorithms.graph import Graph, complete_multipartite, disjoint_union
from impart.data.generators import (
    complete_graph,
    cycle_graph,
    labeled_graphs,
    path_graph,
    petersen_graph,
    random_graphs,
    star_graph,
)
from impart.exceptions import CeilingExceededError


def brute_force_treewidth(graph):
    """Minimum over all elimination orderings of the largest higher-neighbourhood."""
    if graph.n == 0:
        return 0
    best = graph.n
    for ordering in itertools.permutations(range(graph.n)):
        adjacency = {v: set(graph.adjacency[v]) for v in range(graph.n)}
        width = 0
        for v in ordering:
            neighbours = adjacency.pop(v)
            width = max(width, len(neighbours))
            for a in neighbours:
                adjacency[a].discard(v)
                adjacency[a] |= neighbours - {a}
        best = min(best, width)
    return best


def brute_force_pathwidth(graph):
    """Minimum over all orderings of the largest prefix boundary (vertex separation)."""
    if graph.n == 0:
        return 0
    best = graph.n
    for ordering in itertools.permutations(range(graph.n)):
        prefix = set()
        width = 0
        for v in ordering:
            prefix.add(v)
            boundary = sum(1 for u in prefix if set(graph.adjacency[u]) - prefix)
            width = max(width, boundary)
        best = min(best, width)
    return best


# ---------------------------------------------------------------------------
# Fixtures: Small graphs
# ---------------------------------------------------------------------------


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def small_corpus():
    """Every labelled graph on 5 vertices plus a few random 7-vertex graphs."""
    return list(labeled_graphs(5)) + random_graphs(6, 7, 0.4, seed=17)


# ---------------------------------------------------------------------------
# Tests: validation
# ---------------------------------------------------------------------------


class TestValidateTreeDecomposition:
    """Tests for validate_tree_decomposition."""

    def test_c4_two_bags(self, c4):
        decomposition = TreeDecomposition(bags=((0, 1, 2), (0, 2, 3)), tree_edges=((0, 1),))

        assert validate_tree_decomposition(c4, decomposition)
        assert decomposition.width == 2

    def test_k3_missing_vertex_and_edges(self):
        decomposition = TreeDecomposition(bags=((0, 1),))

        assert not validate_tree_decomposition(complete_graph(3), decomposition)

    @pytest.mark.parametrize("n", [1, 4, 6])
    def test_one_bag_is_valid(self, n):
        graph = complete_graph(n)
        decomposition = trivial_decomposition(graph)

        assert validate_tree_decomposition(graph, decomposition)
        assert decomposition.width == n - 1

    def test_bag_graph_must_be_a_tree(self, c4):
        decomposition = TreeDecomposition(
            bags=((0, 1, 2), (0, 2, 3), (0, 2)), tree_edges=((0, 1), (1, 2), (2, 0))
        )

        assert not validate_tree_decomposition(c4, decomposition)

    def test_occurrences_must_be_connected(self):
        """Vertex 0 sits in the two end bags but not the middle one."""
        graph = path_graph(3)
        decomposition = TreeDecomposition(
            bags=((0, 1), (1, 2), (0,)), tree_edges=((0, 1), (1, 2))
        )

        assert not validate_tree_decomposition(graph, decomposition)

    def test_bag_vertex_out_of_range(self):
        decomposition = TreeDecomposition(bags=((0, 5),))

        assert not validate_tree_decomposition(Graph(2), decomposition)

    def test_empty_graph(self):
        assert validate_tree_decomposition(Graph(0), TreeDecomposition(((),)))
        assert not validate_tree_decomposition(Graph(0), TreeDecomposition(()))


class TestValidatePathDecomposition:
    """Tests for validate_path_decomposition."""

    def test_path(self):
        decomposition = PathDecomposition(((0, 1), (1, 2), (2, 3), (3, 4)))

        assert validate_path_decomposition(path_graph(5), decomposition)
        assert decomposition.width == 1

    def test_occurrences_must_be_consecutive(self):
        decomposition = PathDecomposition(((0, 1), (1, 2), (0,)))

        assert not validate_path_decomposition(path_graph(3), decomposition)

    def test_edge_must_be_covered(self, c4):
        decomposition = PathDecomposition(((0, 1, 2), (2, 3)))

        assert not validate_path_decomposition(c4, decomposition)

    def test_as_tree_decomposition(self, c4):
        decomposition = PathDecomposition(((0, 1, 3), (1, 2, 3)))

        assert validate_path_decomposition(c4, decomposition)
        assert validate_tree_decomposition(c4, decomposition.as_tree_decomposition())


# ---------------------------------------------------------------------------
# Tests: treewidth
# ---------------------------------------------------------------------------


class TestTreewidth:
    """Tests for exact treewidth."""

    def test_c4(self, c4):
        assert treewidth(c4)[0] == 2

    @pytest.mark.parametrize("graph", [path_graph(6), star_graph(5)])
    def test_trees(self, graph):
        assert treewidth(graph)[0] == 1

    def test_k33(self):
        assert treewidth(complete_multipartite(3, 2)[0])[0] == 3

    def test_clique(self):
        assert treewidth(complete_graph(5))[0] == 4

    def test_petersen(self):
        assert treewidth(petersen_graph())[0] == 4

    def test_empty_and_single_vertex(self):
        width, decomposition = treewidth(Graph(0))

        assert width == 0
        assert decomposition.bags == ((),)
        assert treewidth(Graph(1))[0] == 0

    def test_disconnected_graph_gives_one_tree(self):
        graph = disjoint_union(cycle_graph(4), path_graph(3))
        width, decomposition = treewidth(graph)

        assert width == 2
        assert validate_tree_decomposition(graph, decomposition)

    def test_witness_is_valid_with_reported_width(self, small_corpus):
        for graph in small_corpus:
            width, decomposition = treewidth(graph)

            assert validate_tree_decomposition(graph, decomposition)
            assert decomposition.width == width

    def test_matches_brute_force(self, small_corpus):
        for graph in small_corpus:
            assert treewidth(graph)[0] == brute_force_treewidth(graph)

    def test_ceiling(self):
        with pytest.raises(CeilingExceededError):
            treewidth(Graph(21))


# ---------------------------------------------------------------------------
# Tests: pathwidth
# ---------------------------------------------------------------------------


class TestPathwidth:
    """Tests for exact pathwidth."""

    def test_c4(self, c4):
        assert pathwidth(c4)[0] == 2

    def test_path(self):
        assert pathwidth(path_graph(5))[0] == 1

    def test_c5(self):
        assert pathwidth(cycle_graph(5))[0] == 2

    def test_edgeless(self):
        width, decomposition = pathwidth(Graph(3))

        assert width == 0
        assert len(decomposition.bags) == 3

    def test_witness_is_valid_with_reported_width(self, small_corpus):
        for graph in small_corpus:
            width, decomposition = pathwidth(graph)

            assert validate_path_decomposition(graph, decomposition)
            assert decomposition.width == width

    def test_matches_brute_force(self, small_corpus):
        for graph in small_corpus:
            assert pathwidth(graph)[0] == brute_force_pathwidth(graph)

    def test_at_least_treewidth(self, small_corpus):
        for graph in small_corpus:
            assert pathwidth(graph)[0] >= treewidth(graph)[0]

    def test_ceiling(self):
        with pytest.raises(CeilingExceededError):
            pathwidth(Graph(21))
