"""
Hardness reductions and their empirical checks.

Lex reduction (Maximum Stable Set → induced k-partite subgraph problem):
G_k = K_k · G satisfies p(G_k, k) = f_k(α(G)), so α(G) <= m iff
p(G_k, k) <= f_k(m).

Tripartite reduction (Tripartite Maximum Degree 4 → Large problem): with k = 3,
m = 0 and ℓ large enough that every graph of maximum degree 4 has p(G) <= ℓ,
the Large instance is a yes exactly when G is 3-colourable.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import pandas as pd

from ..config import (
    TRIPARTITE_REDUCTION_ELL,
    TRIPARTITE_REDUCTION_K,
    TRIPARTITE_REDUCTION_M,
    TRIPARTITE_REDUCTION_MAX_DEGREE,
    worker_count,
)
from ..exceptions import EmptyGraphError, UnsupportedParameterError
from .graph import Graph, lex_product_with_complete
from .imgp import PARAMETERS, ParameterId, f_k, is_defined, p_of_G_k
from .parameters import independence_number, max_degree
from .solvers import ProblemInstance, ikpsp_decide, large_ikpsp_oracle

logger = logging.getLogger(__name__)


def _graph6(graph: Graph) -> str:
    from ..data.formats import emit_graph6

    return emit_graph6(graph)


@dataclass(frozen=True)
class ReductionOutput:
    """
    A reduced instance with the threshold it is tested against.

    Attributes:
        produced: Graph of the reduced instance
        instance: The reduced problem instance
        threshold: ℓ of the reduced instance
        provenance: Reduction name, source graph (graph6) and arguments
    """

    produced: Graph
    instance: ProblemInstance
    threshold: int
    provenance: dict = field(default_factory=dict, compare=False, hash=False)


def mss_to_ikpsp(graph: Graph, m: int, k: int, param: ParameterId) -> ReductionOutput:
    """
    Reduce "is α(G) <= m?" to "is p(G_k, k) <= f_k(m)?".

    Raises:
        ValueError: m < 1 (f_k is only defined on positive integers) or k < 2
    """
    param = ParameterId(param)
    if m < 1:
        raise ValueError(f"the lex reduction needs m >= 1, got {m}")
    produced, _ = lex_product_with_complete(graph, k)
    threshold = f_k(param, k, m)
    return ReductionOutput(
        produced=produced,
        instance=ProblemInstance(produced, param, k, threshold),
        threshold=threshold,
        provenance={
            "reduction": "lex",
            "source_graph6": _graph6(graph),
            "m": m,
            "k": k,
            "parameter": param.value,
        },
    )


def solve_mss_via_ikpsp(graph: Graph, m: int, k: int, param: ParameterId) -> bool:
    """Decide α(G) <= m through the lex reduction."""
    reduced = mss_to_ikpsp(graph, m, k, param)
    instance = reduced.instance
    return ikpsp_decide(instance.graph, instance.param, instance.k, instance.ell).verdict


def theorem1_sides(graph: Graph, k: int, param: ParameterId) -> Tuple[int, int, int]:
    """
    Both sides of p(G_k, k) = f_k(α(G)), computed independently.

    Returns:
        (α(G), p(G_k, k), f_k(α(G)))
    """
    param = ParameterId(param)
    if graph.n == 0:
        raise ValueError("the lex identity needs a graph with at least one vertex")
    produced, _ = lex_product_with_complete(graph, k)
    lhs, _ = p_of_G_k(produced, param, k)
    alpha, _ = independence_number(graph)
    return alpha, lhs, f_k(param, k, alpha)


def verify_theorem1_identity(graph: Graph, k: int, param: ParameterId) -> bool:
    """
    Check p(G_k, k) = f_k(α(G)) by brute force on the product.

    Example:
        >>> verify_theorem1_identity(new_graph(2, [(0, 1)]), 2, ParameterId.ORDER)
        True
    """
    _, lhs, rhs = theorem1_sides(graph, k, param)
    return lhs == rhs


def theorem1_report(
    graphs: Iterable[Graph], k: int, params: Sequence[ParameterId]
) -> pd.DataFrame:
    """
    Lex identity over a corpus, one row per (graph, parameter).

    Graphs are spread over up to IMPART_THREADS worker threads; row order
    follows the input.

    Returns:
        DataFrame with columns graph6, parameter, k, alpha, lhs, rhs, holds.
    """
    selected = [ParameterId(p) for p in params]

    def rows_for(graph: Graph) -> List[dict]:
        encoded = _graph6(graph)
        rows = []
        for param in selected:
            alpha, lhs, rhs = theorem1_sides(graph, k, param)
            if lhs != rhs:
                logger.warning(
                    "lex identity fails: graph6=%s param=%s k=%d lhs=%d rhs=%d",
                    encoded, param, k, lhs, rhs,
                )
            rows.append({
                "graph6": encoded,
                "parameter": param.value,
                "k": k,
                "alpha": alpha,
                "lhs": lhs,
                "rhs": rhs,
                "holds": lhs == rhs,
            })
        return rows

    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        chunks = list(pool.map(rows_for, graphs))

    columns = ["graph6", "parameter", "k", "alpha", "lhs", "rhs", "holds"]
    return pd.DataFrame([row for chunk in chunks for row in chunk], columns=columns)


def tmd4_to_large(graph: Graph, param: ParameterId) -> ReductionOutput:
    """
    Reduce "is G (with Δ(G) <= 4) tripartite?" to the Large problem with k = 3, m = 0.

    Raises:
        UnsupportedParameterError: param is not one of the five degree,
            connectivity or chromatic index parameters
        ValueError: Δ(G) > 4
        EmptyGraphError: G has fewer vertices than the parameter needs
    """
    param = ParameterId(param)
    if param.value not in TRIPARTITE_REDUCTION_ELL:
        raise UnsupportedParameterError(f"the tripartite reduction does not cover {param}")
    if not is_defined(param, graph):
        raise EmptyGraphError(
            f"the tripartite reduction needs at least {PARAMETERS[param].min_order} "
            f"vertices for {param}, got {graph.n}"
        )
    if graph.n > 0 and max_degree(graph) > TRIPARTITE_REDUCTION_MAX_DEGREE:
        raise ValueError(
            f"the tripartite reduction needs maximum degree <= {TRIPARTITE_REDUCTION_MAX_DEGREE}, "
            f"got {max_degree(graph)}"
        )

    ell = TRIPARTITE_REDUCTION_ELL[param.value]
    instance = ProblemInstance(
        graph, param, TRIPARTITE_REDUCTION_K, ell, TRIPARTITE_REDUCTION_M
    )
    return ReductionOutput(
        produced=graph,
        instance=instance,
        threshold=ell,
        provenance={
            "reduction": "tmd4",
            "source_graph6": _graph6(graph),
            "k": TRIPARTITE_REDUCTION_K,
            "m": TRIPARTITE_REDUCTION_M,
            "parameter": param.value,
        },
    )


def solve_tmd4_via_large(graph: Graph, param: ParameterId) -> bool:
    """Decide tripartiteness of a maximum-degree-4 graph through the Large oracle."""
    instance = tmd4_to_large(graph, param).instance
    return large_ikpsp_oracle(
        instance.graph, instance.param, instance.k, instance.ell, instance.m
    ).verdict
