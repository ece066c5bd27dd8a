"""
Test suite for the parameter registry, f_k formulas and p(G, k).

Formulas are checked against values computed on K_{n|k}; p(G, k) is checked on
hand-worked examples and against the formula on complete multipartite graphs.
"""

import logging

import pytest

from impart.algorithms import imgp
from impart.algorithms.graph import Graph, complete_multipartite
from impart.algorithms.imgp import (
    PARAMETERS,
    ParameterId,
    ParameterValue,
    check_P1,
    check_P2,
    evaluate,
    f_k,
    is_defined,
    lemma_table,
    measure,
    p_of_G_k,
)
from impart.algorithms.solvers import FPT_SOLVERS
from impart.data.generators import complete_graph, cycle_graph, random_graphs
from impart.exceptions import CeilingExceededError, EmptyGraphError


ALL_PARAMETERS = list(ParameterId)
HEREDITARY = [p for p in ParameterId if PARAMETERS[p].hereditary]


# ---------------------------------------------------------------------------
# Tests: registry
# ---------------------------------------------------------------------------


class TestRegistry:
    """Tests for the parameter registry."""

    def test_ten_parameters(self):
        assert len(PARAMETERS) == 10
        assert set(PARAMETERS) == set(ParameterId)

    def test_tags_round_trip(self):
        assert ParameterId("chromatic_index") is ParameterId.CHROMATIC_INDEX
        assert str(ParameterId.TREEWIDTH) == "treewidth"

    def test_non_hereditary_parameters(self):
        non_hereditary = {p for p in ParameterId if not PARAMETERS[p].hereditary}

        assert non_hereditary == {
            ParameterId.MIN_DEGREE,
            ParameterId.VERTEX_CONNECTIVITY,
            ParameterId.EDGE_CONNECTIVITY,
        }

    def test_nonlinear_formulas(self):
        nonlinear = {p for p in ParameterId if not PARAMETERS[p].linear}

        assert nonlinear == {ParameterId.SIZE, ParameterId.CHROMATIC_INDEX}

    def test_fpt_class_matches_available_solvers(self):
        fpt = {p for p in ParameterId if PARAMETERS[p].large_class == "fpt"}

        assert fpt == set(FPT_SOLVERS)

    def test_minimum_orders(self):
        assert PARAMETERS[ParameterId.ORDER].min_order == 0
        assert PARAMETERS[ParameterId.MIN_DEGREE].min_order == 1
        assert PARAMETERS[ParameterId.EDGE_CONNECTIVITY].min_order == 2


class TestEvaluate:
    """Tests for evaluate, measure and is_defined."""

    def test_accepts_tags(self):
        assert evaluate("size", cycle_graph(5)) == 5

    def test_measure(self):
        assert measure(ParameterId.ORDER, cycle_graph(4)) == ParameterValue(4, ParameterId.ORDER)

    def test_undefined_on_small_graphs(self):
        assert not is_defined(ParameterId.MIN_DEGREE, Graph(0))
        assert not is_defined(ParameterId.EDGE_CONNECTIVITY, Graph(1))
        assert is_defined(ParameterId.ORDER, Graph(0))

        with pytest.raises(EmptyGraphError):
            evaluate(ParameterId.EDGE_CONNECTIVITY, Graph(1))


# ---------------------------------------------------------------------------
# Tests: f_k
# ---------------------------------------------------------------------------


class TestFormula:
    """Tests for f_k."""

    def test_known_values(self):
        assert f_k(ParameterId.CHROMATIC_INDEX, 3, 3) == 7
        assert f_k(ParameterId.TREEWIDTH, 2, 2) == 2
        assert f_k(ParameterId.SIZE, 3, 2) == 12
        assert f_k(ParameterId.ORDER, 4, 3) == 12
        assert f_k(ParameterId.INDEPENDENCE_NUMBER, 5, 3) == 3

    def test_chromatic_index_bipartite(self):
        values = [f_k(ParameterId.CHROMATIC_INDEX, 2, n) for n in range(1, 5)]

        assert values == [1, 2, 3, 4]

    @pytest.mark.parametrize("param", ALL_PARAMETERS)
    def test_strictly_increasing(self, param):
        for k in range(2, 7):
            values = [f_k(param, k, n) for n in range(1, 17)]

            assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("k, n", [(1, 3), (2, 0)])
    def test_out_of_range(self, k, n):
        with pytest.raises(ValueError):
            f_k(ParameterId.ORDER, k, n)


class TestLemmaTable:
    """Tests for the formula-versus-computed table."""

    def test_every_cell_matches(self):
        table = lemma_table()

        assert list(table.columns) == ["parameter", "k", "n", "formula", "computed", "match"]
        assert not table.empty
        assert table["match"].all()

    def test_every_parameter_present(self):
        table = lemma_table(ks=(2,), ns=(1, 2))

        assert set(table["parameter"]) == {p.value for p in ParameterId}

    def test_selected_parameters(self):
        table = lemma_table(ks=(3,), ns=(2,), params=["size"])

        assert table.to_dict(orient="records") == [
            {"parameter": "size", "k": 3, "n": 2, "formula": 12, "computed": 12, "match": True}
        ]


# ---------------------------------------------------------------------------
# Tests: P1 and P2
# ---------------------------------------------------------------------------


class TestPropertyChecks:
    """Tests for check_P1 and check_P2."""

    @pytest.mark.parametrize("param", ALL_PARAMETERS)
    @pytest.mark.parametrize("n, k", [(2, 2), (3, 2), (2, 3)])
    def test_p1_exhaustive(self, param, n, k):
        assert check_P1(param, n, k, trials=0)

    def test_p1_random_subsets(self):
        assert check_P1(ParameterId.EDGE_CONNECTIVITY, 4, 4, trials=50, seed=3)

    @pytest.mark.parametrize("param", ALL_PARAMETERS)
    @pytest.mark.parametrize("k", [2, 3])
    def test_p2(self, param, k):
        assert check_P2(param, k, n_max=3)

    def test_p2_skips_independence_cells_over_ceiling(self):
        assert check_P2(ParameterId.INDEPENDENCE_NUMBER, 4, 12)

    def test_p2_skips_cells_raising_ceiling(self, monkeypatch):
        def over_ceiling(param, graph):
            raise CeilingExceededError("stub", graph.n, 0)

        monkeypatch.setattr(imgp, "_evaluate", over_ceiling)

        assert check_P2(ParameterId.ORDER, 2, 3)
        assert lemma_table(ks=(2,), ns=(1, 2), params=["order"]).empty

    def test_table_leaves_out_independence_over_ceiling(self):
        table = lemma_table(ks=(4,), ns=(10, 11), params=["independence_number"])

        assert table["n"].tolist() == [10]
        assert table["match"].all()

    def test_p1_violation_is_logged(self, monkeypatch, caplog):
        monkeypatch.setattr(imgp, "f_k", lambda param, k, n: 0)

        with caplog.at_level(logging.WARNING, logger="impart.algorithms.imgp"):
            assert not check_P1(ParameterId.ORDER, 1, 2, trials=0)

        assert "P1 violated" in caplog.text


# ---------------------------------------------------------------------------
# Tests: p(G, k)
# ---------------------------------------------------------------------------


class TestPOfGK:
    """Tests for the brute-force p(G, k)."""

    def test_k4_order(self):
        assert p_of_G_k(complete_graph(4), ParameterId.ORDER, 2) == (2, (0, 1))

    def test_c5_order(self):
        assert p_of_G_k(cycle_graph(5), ParameterId.ORDER, 2) == (4, (0, 1, 2, 3))

    def test_c5_is_tripartite(self):
        assert p_of_G_k(cycle_graph(5), ParameterId.SIZE, 3) == (5, (0, 1, 2, 3, 4))

    @pytest.mark.parametrize("param", ALL_PARAMETERS)
    @pytest.mark.parametrize("n, k", [(2, 2), (2, 3)])
    def test_complete_multipartite_attains_formula(self, param, n, k):
        graph, _ = complete_multipartite(n, k)
        value, kept = p_of_G_k(graph, param, k)

        assert value == f_k(param, k, n)
        assert kept

    def test_nothing_defined(self):
        assert p_of_G_k(Graph(1), ParameterId.EDGE_CONNECTIVITY, 2) == (0, ())

    def test_non_hereditary_can_prefer_a_subgraph(self):
        """K3 plus a pendant: λ is 1 on the whole graph but 2 on the triangle."""
        graph = Graph(4, ((0, 1), (0, 2), (1, 2), (0, 3)))

        assert p_of_G_k(graph, ParameterId.EDGE_CONNECTIVITY, 3)[0] == 2

    @pytest.mark.parametrize("param", HEREDITARY)
    def test_monotone_in_k(self, param):
        for graph in random_graphs(4, 7, 0.5, seed=31):
            values = [p_of_G_k(graph, param, k)[0] for k in (2, 3, 4)]

            assert values == sorted(values)

    def test_k_below_two(self):
        with pytest.raises(ValueError):
            p_of_G_k(cycle_graph(5), ParameterId.ORDER, 1)

    def test_ceiling(self):
        with pytest.raises(CeilingExceededError):
            p_of_G_k(Graph(17), ParameterId.ORDER, 2)
