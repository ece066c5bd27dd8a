"""
Test suite for the lex and tripartite reductions.

The lex identity p(K_k · G, k) = f_k(α(G)) is checked by brute force on every
small labelled graph, and both reductions are checked to preserve the answer
of the problem they reduce from.
"""

import pytest

from impart.algorithms.graph import Graph, complete_multipartite, is_connected
from impart.algorithms.imgp import PARAMETERS, ParameterId
from impart.algorithms.parameters import independence_number, max_degree
from impart.algorithms.partiteness import is_k_partite
from impart.algorithms.reductions import (
    mss_to_ikpsp,
    solve_mss_via_ikpsp,
    solve_tmd4_via_large,
    theorem1_report,
    theorem1_sides,
    tmd4_to_large,
    verify_theorem1_identity,
)
from impart.data.formats import emit_graph6
from impart.data.generators import (
    atlas_graphs,
    complete_graph,
    cycle_graph,
    labeled_graphs,
    max_degree4,
    path_graph,
    random_graphs,
)
from impart.exceptions import EmptyGraphError, UnsupportedParameterError


CHEAP_PARAMETERS = [
    ParameterId.ORDER,
    ParameterId.SIZE,
    ParameterId.MIN_DEGREE,
    ParameterId.MAX_DEGREE,
    ParameterId.VERTEX_CONNECTIVITY,
    ParameterId.EDGE_CONNECTIVITY,
    ParameterId.INDEPENDENCE_NUMBER,
    ParameterId.CHROMATIC_INDEX,
]

TRIPARTITE_PARAMETERS = [
    ParameterId.MIN_DEGREE,
    ParameterId.MAX_DEGREE,
    ParameterId.VERTEX_CONNECTIVITY,
    ParameterId.EDGE_CONNECTIVITY,
    ParameterId.CHROMATIC_INDEX,
]


def small_graphs(max_n):
    for n in range(1, max_n + 1):
        yield from labeled_graphs(n)


# ---------------------------------------------------------------------------
# Tests: lex reduction
# ---------------------------------------------------------------------------


class TestLexReduction:
    """Tests for mss_to_ikpsp."""

    def test_p3_threshold(self):
        reduced = mss_to_ikpsp(path_graph(3), 1, 2, ParameterId.ORDER)

        assert reduced.threshold == 2
        assert reduced.produced.order == 6
        assert reduced.instance.k == 2
        assert reduced.instance.ell == 2

    def test_threshold_follows_formula(self):
        reduced = mss_to_ikpsp(cycle_graph(5), 2, 3, ParameterId.CHROMATIC_INDEX)

        assert reduced.threshold == 4

    def test_provenance(self):
        graph = path_graph(3)
        reduced = mss_to_ikpsp(graph, 1, 2, ParameterId.SIZE)

        assert reduced.provenance == {
            "reduction": "lex",
            "source_graph6": emit_graph6(graph),
            "m": 1,
            "k": 2,
            "parameter": "size",
        }

    def test_m_below_one(self):
        with pytest.raises(ValueError):
            mss_to_ikpsp(path_graph(3), 0, 2, ParameterId.ORDER)

    def test_worked_answers(self):
        assert not solve_mss_via_ikpsp(path_graph(3), 1, 2, ParameterId.ORDER)
        assert solve_mss_via_ikpsp(path_graph(3), 2, 2, ParameterId.ORDER)
        assert solve_mss_via_ikpsp(complete_graph(3), 1, 2, ParameterId.ORDER)

    @pytest.mark.parametrize("param", CHEAP_PARAMETERS)
    def test_preserves_answer(self, param):
        for graph in small_graphs(4):
            alpha, _ = independence_number(graph)
            for m in range(1, graph.n + 1):
                assert solve_mss_via_ikpsp(graph, m, 2, param) == (alpha <= m)

    @pytest.mark.parametrize("param", [ParameterId.TREEWIDTH, ParameterId.PATHWIDTH])
    def test_preserves_answer_for_widths(self, param):
        for graph in random_graphs(20, 5, 0.5, seed=47):
            alpha, _ = independence_number(graph)
            for m in range(1, graph.n + 1):
                assert solve_mss_via_ikpsp(graph, m, 2, param) == (alpha <= m)


class TestLexIdentity:
    """Tests for p(G_k, k) = f_k(α(G))."""

    def test_sides(self):
        assert theorem1_sides(path_graph(3), 2, ParameterId.ORDER) == (2, 4, 4)

    def test_edge_order(self):
        assert verify_theorem1_identity(Graph(2, ((0, 1),)), 2, ParameterId.ORDER)

    @pytest.mark.parametrize("param", list(ParameterId))
    def test_all_graphs_up_to_three_vertices(self, param):
        for graph in small_graphs(3):
            assert verify_theorem1_identity(graph, 2, param)

    @pytest.mark.parametrize("param", list(ParameterId))
    def test_three_parts(self, param):
        for graph in small_graphs(2):
            assert verify_theorem1_identity(graph, 3, param)

    @pytest.mark.parametrize("param", CHEAP_PARAMETERS)
    def test_all_graphs_on_four_vertices(self, param):
        for graph in labeled_graphs(4):
            assert verify_theorem1_identity(graph, 2, param)

    @pytest.mark.parametrize("param", [ParameterId.TREEWIDTH, ParameterId.PATHWIDTH])
    def test_widths_on_random_graphs(self, param):
        for graph in random_graphs(20, 5, 0.5, seed=47):
            assert verify_theorem1_identity(graph, 2, param)

    def test_complete_multipartite_input(self):
        graph, _ = complete_multipartite(2, 2)

        assert theorem1_sides(graph, 2, ParameterId.SIZE) == (2, 4, 4)

    def test_empty_graph(self):
        with pytest.raises(ValueError):
            theorem1_sides(Graph(0), 2, ParameterId.ORDER)


class TestLexReport:
    """Tests for theorem1_report."""

    def test_rows_follow_input_order(self, monkeypatch):
        monkeypatch.setenv("IMPART_THREADS", "2")
        graphs = [path_graph(3), complete_graph(3), cycle_graph(4)]
        report = theorem1_report(graphs, 2, ["order", "independence_number"])

        assert list(report.columns) == ["graph6", "parameter", "k", "alpha", "lhs", "rhs", "holds"]
        assert report["graph6"].tolist() == [emit_graph6(g) for g in graphs for _ in range(2)]
        assert report["alpha"].tolist() == [2, 2, 1, 1, 2, 2]
        assert report["holds"].all()

    def test_empty_corpus(self):
        report = theorem1_report([], 2, ["order"])

        assert report.empty


# ---------------------------------------------------------------------------
# Tests: tripartite reduction
# ---------------------------------------------------------------------------


class TestTripartiteReduction:
    """Tests for tmd4_to_large."""

    def test_c5_is_tripartite(self):
        reduced = tmd4_to_large(cycle_graph(5), ParameterId.MAX_DEGREE)

        assert reduced.instance.k == 3
        assert reduced.instance.m == 0
        assert reduced.threshold == 4
        assert solve_tmd4_via_large(cycle_graph(5), ParameterId.MAX_DEGREE)

    def test_k5_chromatic_index(self):
        reduced = tmd4_to_large(complete_graph(5), ParameterId.CHROMATIC_INDEX)

        assert reduced.threshold == 5
        assert not solve_tmd4_via_large(complete_graph(5), ParameterId.CHROMATIC_INDEX)

    def test_k4_is_not_tripartite(self):
        assert not solve_tmd4_via_large(complete_graph(4), ParameterId.MIN_DEGREE)

    def test_graph_is_passed_through(self):
        graph = cycle_graph(6)

        assert tmd4_to_large(graph, ParameterId.EDGE_CONNECTIVITY).produced == graph

    def test_degree_above_four(self):
        with pytest.raises(ValueError):
            tmd4_to_large(complete_graph(6), ParameterId.MAX_DEGREE)

    @pytest.mark.parametrize("param", [ParameterId.TREEWIDTH, ParameterId.ORDER])
    def test_unsupported_parameter(self, param):
        with pytest.raises(UnsupportedParameterError):
            tmd4_to_large(cycle_graph(5), param)

    @pytest.mark.parametrize("param", TRIPARTITE_PARAMETERS)
    def test_preserves_answer_on_small_graphs(self, param):
        for n in range(1, 6):
            for graph in labeled_graphs(n):
                if graph.n < PARAMETERS[param].min_order:
                    continue
                expected = is_k_partite(graph, 3) is not None

                assert solve_tmd4_via_large(graph, param) == expected

    @pytest.mark.parametrize("param", TRIPARTITE_PARAMETERS)
    def test_preserves_answer_on_connected_graphs(self, param):
        graphs = [
            g for g in atlas_graphs(6)
            if g.n >= max(1, PARAMETERS[param].min_order)
            and is_connected(g)
            and max_degree(g) <= 4
        ]
        assert any(g.n == 6 for g in graphs)

        for graph in graphs:
            expected = is_k_partite(graph, 3) is not None
            assert solve_tmd4_via_large(graph, param) == expected

    def test_single_vertex(self):
        for param in TRIPARTITE_PARAMETERS:
            if param == ParameterId.EDGE_CONNECTIVITY:
                continue
            assert solve_tmd4_via_large(Graph(1), param)

    def test_too_few_vertices(self):
        with pytest.raises(EmptyGraphError):
            tmd4_to_large(Graph(1), ParameterId.EDGE_CONNECTIVITY)
        with pytest.raises(EmptyGraphError):
            tmd4_to_large(Graph(0), ParameterId.MIN_DEGREE)

    def test_empty_graph_chromatic_index(self):
        assert solve_tmd4_via_large(Graph(0), ParameterId.CHROMATIC_INDEX)

    @pytest.mark.parametrize("param", TRIPARTITE_PARAMETERS)
    def test_preserves_answer_on_degree_four_graphs(self, param):
        for seed in range(15):
            graph = max_degree4(9, seed=seed)
            assert max_degree(graph) <= 4

            expected = is_k_partite(graph, 3) is not None
            assert solve_tmd4_via_large(graph, param) == expected
