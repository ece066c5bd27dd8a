"""
Induced multipartite graph parameters.

A parameter p qualifies when (P1) no induced subgraph of K_{n|k} has a larger
value than K_{n|k} itself, and (P2) n ↦ p(K_{n|k}) is a strictly increasing,
easily computed function f_k. This module holds the ten qualifying parameters,
their f_k formulas, checkers for both properties, and the brute-force
definition of p(G, k): the maximum of p(H) over induced k-partite subgraphs H.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..config import (
    CHROMATIC_INDEX_MAX_EDGES,
    DEFAULT_P1_TRIALS,
    DEFAULT_SEED,
    INDEPENDENCE_MAX_VERTICES,
    LEMMA_WIDTH_MAX_ORDER,
    P1_EXHAUSTIVE_MAX_ORDER,
    PK_MAX_VERTICES,
)
from ..exceptions import CeilingExceededError, EmptyGraphError
from . import parameters
from .graph import Graph, VertexSet, complete_multipartite, induced_subgraph, mask_members
from .partiteness import k_colorable_subsets

logger = logging.getLogger(__name__)


class ParameterId(str, Enum):
    ORDER = "order"
    SIZE = "size"
    MIN_DEGREE = "min_degree"
    MAX_DEGREE = "max_degree"
    VERTEX_CONNECTIVITY = "vertex_connectivity"
    EDGE_CONNECTIVITY = "edge_connectivity"
    INDEPENDENCE_NUMBER = "independence_number"
    CHROMATIC_INDEX = "chromatic_index"
    TREEWIDTH = "treewidth"
    PATHWIDTH = "pathwidth"

    def __str__(self) -> str:
        return self.value


def _linear(k: int, n: int) -> int:
    return (k - 1) * n


def _chromatic_index_formula(k: int, n: int) -> int:
    return (k - 1) * n if (k * n) % 2 == 0 else (k - 1) * n + 1


@dataclass(frozen=True)
class ParameterInfo:
    """
    Registry entry for one parameter.

    Attributes:
        compute: Exact evaluation on a graph
        formula: f_k(n) as a function of (k, n)
        formula_text: Human-readable f_k
        hereditary: Non-increasing under induced subgraphs on all graphs
        linear: f_k is linear in n
        large_class: "fpt" or "para-np-hard" for the vertex-deletion problem
        min_order: Smallest order on which the parameter is defined
    """

    compute: Callable[[Graph], int]
    formula: Callable[[int, int], int]
    formula_text: str
    hereditary: bool
    linear: bool
    large_class: str
    min_order: int = 0


PARAMETERS: Dict[ParameterId, ParameterInfo] = {
    ParameterId.ORDER: ParameterInfo(
        parameters.order, lambda k, n: k * n, "kn", True, True, "fpt"
    ),
    ParameterId.SIZE: ParameterInfo(
        parameters.size, lambda k, n: comb(k, 2) * n * n, "C(k,2)n^2", True, False, "fpt"
    ),
    ParameterId.MIN_DEGREE: ParameterInfo(
        parameters.min_degree, _linear, "(k-1)n", False, True, "para-np-hard", 1
    ),
    ParameterId.MAX_DEGREE: ParameterInfo(
        parameters.max_degree, _linear, "(k-1)n", True, True, "para-np-hard", 1
    ),
    ParameterId.VERTEX_CONNECTIVITY: ParameterInfo(
        parameters.vertex_connectivity, _linear, "(k-1)n", False, True, "para-np-hard", 1
    ),
    ParameterId.EDGE_CONNECTIVITY: ParameterInfo(
        parameters.edge_connectivity, _linear, "(k-1)n", False, True, "para-np-hard", 2
    ),
    ParameterId.INDEPENDENCE_NUMBER: ParameterInfo(
        lambda g: parameters.independence_number(g)[0], lambda k, n: n, "n", True, True, "fpt"
    ),
    ParameterId.CHROMATIC_INDEX: ParameterInfo(
        parameters.chromatic_index,
        _chromatic_index_formula,
        "(k-1)n, +1 if kn odd",
        True,
        False,
        "para-np-hard",
    ),
    ParameterId.TREEWIDTH: ParameterInfo(
        lambda g: parameters.treewidth(g)[0], _linear, "(k-1)n", True, True, "fpt"
    ),
    ParameterId.PATHWIDTH: ParameterInfo(
        lambda g: parameters.pathwidth(g)[0], _linear, "(k-1)n", True, True, "fpt"
    ),
}


@dataclass(frozen=True)
class ParameterValue:
    value: int
    parameter: ParameterId


def f_k(param: ParameterId, k: int, n: int) -> int:
    """
    Value of the parameter on K_{n|k}.

    Args:
        param: Parameter tag
        k: Number of parts (>= 2)
        n: Part size (>= 1)

    Returns:
        f_k(n); strictly increasing in n for every parameter.

    Example:
        >>> f_k(ParameterId.CHROMATIC_INDEX, 3, 3)
        7
    """
    if k < 2:
        raise ValueError(f"f_k needs k >= 2, got {k}")
    if n < 1:
        raise ValueError(f"f_k needs n >= 1, got {n}")
    return PARAMETERS[ParameterId(param)].formula(k, n)


def is_defined(param: ParameterId, graph: Graph) -> bool:
    return graph.n >= PARAMETERS[ParameterId(param)].min_order


@lru_cache(maxsize=1 << 16)
def _evaluate(param: ParameterId, graph: Graph) -> int:
    return PARAMETERS[param].compute(graph)


def evaluate(param: ParameterId, graph: Graph) -> int:
    """
    Compute the parameter on G.

    Raises:
        EmptyGraphError: G is too small for the parameter
        CeilingExceededError: an underlying exact routine is over its ceiling
    """
    param = ParameterId(param)
    if not is_defined(param, graph):
        raise EmptyGraphError(f"{param} is undefined on a graph with {graph.n} vertices")
    return _evaluate(param, graph)


def measure(param: ParameterId, graph: Graph) -> ParameterValue:
    return ParameterValue(evaluate(param, graph), ParameterId(param))


# ---------------------------------------------------------------------------
# p(G, k)
# ---------------------------------------------------------------------------


def _maximal_subsets(colorable: np.ndarray, n: int) -> np.ndarray:
    """Entries of `colorable` with no colourable one-vertex extension."""
    index = np.arange(colorable.shape[0], dtype=np.int64)
    extendable = np.zeros_like(colorable)
    for v in range(n):
        missing = (index >> v & 1) == 0
        extendable |= missing & colorable[index | (1 << v)]
    return colorable & ~extendable


def p_of_G_k(graph: Graph, param: ParameterId, k: int) -> Tuple[int, VertexSet]:
    """
    p(G, k): the largest parameter value over induced k-partite subgraphs.

    Subsets are scanned in ascending bitmask order and the first maximum wins.
    For hereditary parameters only maximal k-partite subsets are examined,
    since a subset's value never exceeds that of a k-partite superset.
    Subsets on which the parameter is undefined are skipped.

    Returns:
        (p(G, k), S) where G[S] attains it; (0, ()) if no subset qualifies.

    Raises:
        CeilingExceededError: n above PK_MAX_VERTICES

    Example:
        >>> p_of_G_k(complete_multipartite(1, 4)[0], ParameterId.ORDER, 2)
        (2, (0, 1))
    """
    param = ParameterId(param)
    if k < 2:
        raise ValueError(f"p(G, k) needs k >= 2, got {k}")
    if graph.n > PK_MAX_VERTICES:
        raise CeilingExceededError("p_of_G_k", graph.n, PK_MAX_VERTICES)

    info = PARAMETERS[param]
    candidates = k_colorable_subsets(graph, k)
    if info.hereditary:
        candidates = _maximal_subsets(candidates, graph.n)

    best_value: Optional[int] = None
    best_set: VertexSet = ()
    for mask in np.flatnonzero(candidates).tolist():
        members = mask_members(mask)
        if len(members) < info.min_order:
            continue
        value = _evaluate(param, induced_subgraph(graph, members))
        if best_value is None or value > best_value:
            best_value, best_set = value, tuple(members)

    if best_value is None:
        return 0, ()
    return best_value, best_set


# ---------------------------------------------------------------------------
# Property checks
# ---------------------------------------------------------------------------


def _within_limits(param: ParameterId, graph: Graph) -> bool:
    """True when the table and P2 checks should evaluate the parameter on G."""
    if param in (ParameterId.TREEWIDTH, ParameterId.PATHWIDTH):
        return graph.n <= LEMMA_WIDTH_MAX_ORDER
    if param is ParameterId.CHROMATIC_INDEX:
        return len(graph.edges) <= CHROMATIC_INDEX_MAX_EDGES
    if param is ParameterId.INDEPENDENCE_NUMBER:
        return graph.n <= INDEPENDENCE_MAX_VERTICES
    return True


def _formula_cell(param: ParameterId, n: int, k: int) -> Optional[int]:
    """Computed value on K_{n|k}, or None when the cell is over a ceiling."""
    graph, _ = complete_multipartite(n, k)
    if not _within_limits(param, graph):
        logger.debug("skipping %s on K_{%d|%d}: over limits", param, n, k)
        return None
    try:
        return _evaluate(param, graph)
    except CeilingExceededError as exc:
        logger.debug("skipping %s on K_{%d|%d}: %s", param, n, k, exc)
        return None


def _subsets_to_check(total: int, trials: int, seed: int) -> Iterator[List[int]]:
    if total <= P1_EXHAUSTIVE_MAX_ORDER:
        for mask in range(1 << total):
            yield mask_members(mask)
    rng = np.random.default_rng(seed)
    for row in rng.integers(0, 2, size=(trials, total)):
        yield np.flatnonzero(row).tolist()


def check_P1(
    param: ParameterId,
    n: int,
    k: int,
    trials: int = DEFAULT_P1_TRIALS,
    seed: int = DEFAULT_SEED,
) -> bool:
    """
    Check that no induced subgraph H of K_{n|k} has p(H) > f_k(n).

    Every subset is checked when kn <= P1_EXHAUSTIVE_MAX_ORDER; `trials` uniform
    random subsets are checked on top of that. Each violation is logged.

    Returns:
        True when no violation was found.
    """
    param = ParameterId(param)
    graph, _ = complete_multipartite(n, k)
    bound = f_k(param, k, n)

    holds = True
    for members in _subsets_to_check(graph.n, trials, seed):
        sub = induced_subgraph(graph, members)
        if not is_defined(param, sub):
            continue
        value = _evaluate(param, sub)
        if value > bound:
            logger.warning(
                "P1 violated for %s on K_{%d|%d}: subset %s has value %d > %d",
                param, n, k, members, value, bound,
            )
            holds = False
    return holds


def check_P2(param: ParameterId, k: int, n_max: int) -> bool:
    """
    Check that f_k is strictly increasing on 1..n_max and matches the computed
    parameter on each constructed K_{n|k} (cells over a ceiling are skipped).
    """
    param = ParameterId(param)
    values = [f_k(param, k, n) for n in range(1, n_max + 1)]
    holds = all(a < b for a, b in zip(values, values[1:]))
    if not holds:
        logger.warning("P2 violated for %s at k=%d: f_k not strictly increasing %s", param, k, values)

    for n, expected in enumerate(values, start=1):
        computed = _formula_cell(param, n, k)
        if computed is None:
            continue
        if computed != expected:
            logger.warning(
                "P2 violated for %s on K_{%d|%d}: computed %d, formula %d",
                param, n, k, computed, expected,
            )
            holds = False
    return holds


def lemma_table(
    ks: Sequence[int] = (2, 3, 4),
    ns: Sequence[int] = (1, 2, 3, 4),
    params: Optional[Iterable[ParameterId]] = None,
) -> pd.DataFrame:
    """
    Formula versus computed value of every parameter on K_{n|k}.

    Returns:
        DataFrame with columns parameter, k, n, formula, computed, match.
        Cells over a ceiling are left out.
    """
    selected = list(ParameterId) if params is None else [ParameterId(p) for p in params]
    rows = []
    for param in selected:
        for k in ks:
            for n in ns:
                computed = _formula_cell(param, n, k)
                if computed is None:
                    continue
                expected = f_k(param, k, n)
                rows.append({
                    "parameter": param.value,
                    "k": k,
                    "n": n,
                    "formula": expected,
                    "computed": computed,
                    "match": computed == expected,
                })
    return pd.DataFrame(rows, columns=["parameter", "k", "n", "formula", "computed", "match"])
