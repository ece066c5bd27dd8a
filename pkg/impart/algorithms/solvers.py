"""
Decision procedures for the two problems built on p(G, k).

Induced k-partite subgraph problem: is p(G, k) <= ℓ?  Only an exact brute-force
reference exists (the problem is W[1]-hard in ℓ).

Large problem: is there a set S of at most m vertices such that H = G∖S is
k-partite with p(H) <= ℓ?  Besides the brute-force oracle there is one FPT
procedure per tractable parameter:

    independence_number   no if |G| > kℓ + m, else try every S
    treewidth, pathwidth  try every S inside a largest bag of a decomposition
    order                 no if |G| > ℓ + m, else try every S
    size                  delete high-degree vertices, bound the edges, try S

Candidate sets S are always tried by size and then lexicographically, so the
witness returned is the first one in that order.
"""

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import partial
from itertools import combinations
from math import comb
from typing import Callable, Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

import pandas as pd

from ..config import ORACLE_MAX_CANDIDATES
from ..exceptions import (
    CeilingExceededError,
    InvalidDecompositionError,
    UnsupportedParameterError,
)
from .decompositions import (
    PathDecomposition,
    TreeDecomposition,
    pathwidth,
    treewidth,
    validate_path_decomposition,
    validate_tree_decomposition,
)
from .graph import Graph, VertexSet, delete_vertices, induced_subgraph
from .imgp import PARAMETERS, ParameterId, evaluate, is_defined, p_of_G_k
from .parameters import find_stable_set, independence_number
from .partiteness import (
    is_bipartite,
    is_colorable,
    is_k_partite,
    is_k_partite_via_decomposition,
)

logger = logging.getLogger(__name__)


class ExitReason(str, Enum):
    PIGEONHOLE = "pigeonhole"                  # |G| > kℓ + m
    TOO_MANY_VERTICES = "too_many_vertices"    # |G| > ℓ + m
    WIDTH_EXCEEDED = "width_exceeded"          # tw(G) or pw(G) > ℓ + m
    TOO_MANY_HIGH_DEGREE = "too_many_high_degree"  # s > m
    TOO_MANY_EDGES = "too_many_edges"          # ‖Ĝ‖ > t

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ProblemInstance:
    """
    One problem instance. `m` is None for the induced k-partite subgraph problem.
    """

    graph: Graph
    param: ParameterId
    k: int
    ell: int
    m: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "param", ParameterId(self.param))
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.ell < 0:
            raise ValueError(f"ℓ must be non-negative, got {self.ell}")
        if self.m is not None and self.m < 0:
            raise ValueError(f"m must be non-negative, got {self.m}")


@dataclass
class SolverTrace:
    """
    What a solver did on the way to its verdict.

    Attributes:
        early_exit_reason: Set when a counting bound answered no before any search
        s: High-degree vertex count (edges procedure)
        t: Edge bound (ℓ + m)(m - s) + ℓ (edges procedure)
        bag: Largest bag searched (treewidth / pathwidth procedures)
        candidates_examined: Deletion sets tried
        value: p(G, k) (induced k-partite subgraph problem)
        isolated: Isolated vertices of Ĝ set aside (edges procedure)
    """

    early_exit_reason: Optional[ExitReason] = None
    s: Optional[int] = None
    t: Optional[int] = None
    bag: Optional[VertexSet] = None
    candidates_examined: int = 0
    value: Optional[int] = None
    isolated: Tuple[int, ...] = ()

    def to_dict(self) -> dict:
        result = asdict(self)
        if self.early_exit_reason is not None:
            result["early_exit_reason"] = self.early_exit_reason.value
        for key in ("bag", "isolated"):
            if result[key] is not None:
                result[key] = list(result[key])
        return result


@dataclass
class Answer:
    """Verdict, deletion set S (H = G∖S) and trace."""

    verdict: bool
    witness: Optional[VertexSet] = None
    trace: SolverTrace = field(default_factory=SolverTrace)

    @property
    def label(self) -> str:
        return "yes" if self.verdict else "no"


Solver = Callable[[Graph, int, int, int], Answer]


def _check_args(k: int, ell: int, m: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if ell < 0:
        raise ValueError(f"ℓ must be non-negative, got {ell}")
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")


def _deletion_sets(pool: Sequence[int], max_size: int) -> Iterator[VertexSet]:
    """Subsets of `pool` with at most max_size members, by size then lexicographically."""
    pool = sorted(pool)
    for size in range(min(max_size, len(pool)) + 1):
        yield from combinations(pool, size)


def _k_partite(graph: Graph, k: int) -> bool:
    if k == 2:
        return is_bipartite(graph) is not None
    return is_colorable(graph, k)


def _early_no(trace: SolverTrace, reason: ExitReason) -> Answer:
    trace.early_exit_reason = reason
    logger.debug("early exit: %s", reason)
    return Answer(False, None, trace)


# ---------------------------------------------------------------------------
# Exact references
# ---------------------------------------------------------------------------


def ikpsp_decide(graph: Graph, param: ParameterId, k: int, ell: int) -> Answer:
    """
    Decide p(G, k) <= ℓ by computing p(G, k).

    On a yes the witness is the complement of the maximising kept set, and the
    trace always carries p(G, k).
    """
    instance = ProblemInstance(graph, param, k, ell)
    value, kept = p_of_G_k(graph, instance.param, k)
    trace = SolverTrace(value=value)
    if value > ell:
        return Answer(False, None, trace)

    witness = None
    if is_defined(instance.param, induced_subgraph(graph, kept)):
        keep = set(kept)
        witness = tuple(v for v in range(graph.n) if v not in keep)
    return Answer(True, witness, trace)


def _satisfies(graph: Graph, param: ParameterId, k: int, ell: int) -> bool:
    """H is k-partite and p(H) <= ℓ (undefined p counts as failure)."""
    if not is_defined(param, graph):
        return False
    return _k_partite(graph, k) and evaluate(param, graph) <= ell


def large_ikpsp_oracle(graph: Graph, param: ParameterId, k: int, ell: int, m: int) -> Answer:
    """
    Brute-force reference for the Large problem: try every S with |S| <= m.

    Raises:
        CeilingExceededError: more than ORACLE_MAX_CANDIDATES deletion sets
    """
    instance = ProblemInstance(graph, param, k, ell, m)
    candidates = sum(comb(graph.n, i) for i in range(min(m, graph.n) + 1))
    if candidates > ORACLE_MAX_CANDIDATES:
        raise CeilingExceededError("large_ikpsp_oracle", candidates, ORACLE_MAX_CANDIDATES)

    trace = SolverTrace()
    for deleted in _deletion_sets(range(graph.n), m):
        trace.candidates_examined += 1
        if _satisfies(delete_vertices(graph, deleted), instance.param, k, ell):
            return Answer(True, deleted, trace)
    return Answer(False, None, trace)


def max_stable_set_decide(graph: Graph, m: int) -> bool:
    """Is α(G) <= m?"""
    return independence_number(graph)[0] <= m


# ---------------------------------------------------------------------------
# FPT procedures
# ---------------------------------------------------------------------------


def large_fpt_independence(graph: Graph, k: int, ell: int, m: int) -> Answer:
    """
    Large problem for the independence number.

    A k-partite graph with α <= ℓ has at most kℓ vertices, so |G| > kℓ + m is a
    no. Otherwise every S is tried: G∖S is rejected as soon as a stable set of
    ℓ + 1 vertices turns up, and the survivors are tested for k-partiteness.
    """
    _check_args(k, ell, m)
    trace = SolverTrace()
    if graph.n > k * ell + m:
        return _early_no(trace, ExitReason.PIGEONHOLE)

    for deleted in _deletion_sets(range(graph.n), m):
        trace.candidates_examined += 1
        remainder = delete_vertices(graph, deleted)
        if find_stable_set(remainder, ell + 1) is not None:
            continue
        if _k_partite(remainder, k):
            return Answer(True, deleted, trace)
    return Answer(False, None, trace)


def _largest_bag_search(
    graph: Graph,
    k: int,
    ell: int,
    m: int,
    decomposition: Union[TreeDecomposition, PathDecomposition],
    width_of: Callable[[Graph], Tuple[int, Union[TreeDecomposition, PathDecomposition]]],
    trace: SolverTrace,
) -> Answer:
    bag = decomposition.largest_bag()
    trace.bag = bag
    logger.debug("searching deletion sets inside bag %s", bag)

    for deleted in _deletion_sets(bag, m):
        trace.candidates_examined += 1
        remainder = delete_vertices(graph, deleted)
        width, own = width_of(remainder)
        if width > ell:
            continue
        if isinstance(own, PathDecomposition):
            own = own.as_tree_decomposition()
        if is_k_partite_via_decomposition(remainder, own, k) is not None:
            return Answer(True, deleted, trace)
    return Answer(False, None, trace)


def large_fpt_treewidth(
    graph: Graph,
    k: int,
    ell: int,
    m: int,
    decomposition: Optional[TreeDecomposition] = None,
) -> Answer:
    """
    Large problem for treewidth.

    With a decomposition of width <= ℓ + m (the exact one unless supplied), only
    deletion sets inside a largest bag are tried. A no can therefore disagree
    with the oracle when the obstacles sit in different bags; a yes is always
    sound.

    Raises:
        InvalidDecompositionError: supplied decomposition is not valid for G
        ValueError: supplied decomposition is wider than ℓ + m
    """
    _check_args(k, ell, m)
    trace = SolverTrace()
    if decomposition is None:
        width, decomposition = treewidth(graph)
    else:
        if not validate_tree_decomposition(graph, decomposition):
            raise InvalidDecompositionError("tree decomposition is not valid for the graph")
        width = decomposition.width
        if width > ell + m:
            raise ValueError(f"supplied decomposition has width {width} > ℓ + m = {ell + m}")

    if width > ell + m:
        return _early_no(trace, ExitReason.WIDTH_EXCEEDED)
    return _largest_bag_search(graph, k, ell, m, decomposition, treewidth, trace)


def large_fpt_pathwidth(
    graph: Graph,
    k: int,
    ell: int,
    m: int,
    decomposition: Optional[PathDecomposition] = None,
) -> Answer:
    """Pathwidth counterpart of large_fpt_treewidth."""
    _check_args(k, ell, m)
    trace = SolverTrace()
    if decomposition is None:
        width, decomposition = pathwidth(graph)
    else:
        if not validate_path_decomposition(graph, decomposition):
            raise InvalidDecompositionError("path decomposition is not valid for the graph")
        width = decomposition.width
        if width > ell + m:
            raise ValueError(f"supplied decomposition has width {width} > ℓ + m = {ell + m}")

    if width > ell + m:
        return _early_no(trace, ExitReason.WIDTH_EXCEEDED)
    return _largest_bag_search(graph, k, ell, m, decomposition, pathwidth, trace)


def large_fpt_vertices(graph: Graph, k: int, ell: int, m: int) -> Answer:
    """Large problem for the order: |G| > ℓ + m is a no, otherwise try every S."""
    _check_args(k, ell, m)
    trace = SolverTrace()
    if graph.n > ell + m:
        return _early_no(trace, ExitReason.TOO_MANY_VERTICES)

    for deleted in _deletion_sets(range(graph.n), m):
        trace.candidates_examined += 1
        remainder = delete_vertices(graph, deleted)
        if remainder.n <= ell and _k_partite(remainder, k):
            return Answer(True, deleted, trace)
    return Answer(False, None, trace)


def large_fpt_edges(graph: Graph, k: int, ell: int, m: int) -> Answer:
    """
    Large problem for the size.

    Every vertex of degree > ℓ + m has to be deleted (s of them). What is left,
    Ĝ, may lose at most (ℓ + m) edges per further deletion, so more than
    t = (ℓ + m)(m - s) + ℓ edges is a no. Isolated vertices of Ĝ never need
    deleting; they are set aside (and stay in H) while S ranges over the rest.
    The witness is the high-degree vertices together with S, in G's ids.
    """
    _check_args(k, ell, m)
    trace = SolverTrace()
    bound = ell + m

    high = [v for v in range(graph.n) if graph.degree(v) > bound]
    trace.s = len(high)
    if trace.s > m:
        return _early_no(trace, ExitReason.TOO_MANY_HIGH_DEGREE)

    high_set = set(high)
    rest = [v for v in range(graph.n) if v not in high_set]
    reduced = induced_subgraph(graph, rest)
    trace.t = bound * (m - trace.s) + ell
    if reduced.size > trace.t:
        return _early_no(trace, ExitReason.TOO_MANY_EDGES)

    core = [i for i in range(reduced.n) if reduced.degree(i) > 0]
    trace.isolated = tuple(rest[i] for i in range(reduced.n) if reduced.degree(i) == 0)
    core_graph = induced_subgraph(reduced, core)

    for deleted in _deletion_sets(range(core_graph.n), m - trace.s):
        trace.candidates_examined += 1
        remainder = delete_vertices(core_graph, deleted)
        if remainder.size <= ell and _k_partite(remainder, k):
            witness = tuple(sorted(high + [rest[core[i]] for i in deleted]))
            return Answer(True, witness, trace)
    return Answer(False, None, trace)


FPT_SOLVERS: Dict[ParameterId, Solver] = {
    ParameterId.INDEPENDENCE_NUMBER: large_fpt_independence,
    ParameterId.TREEWIDTH: large_fpt_treewidth,
    ParameterId.PATHWIDTH: large_fpt_pathwidth,
    ParameterId.ORDER: large_fpt_vertices,
    ParameterId.SIZE: large_fpt_edges,
}


def large_fpt_decide(graph: Graph, param: ParameterId, k: int, ell: int, m: int) -> Answer:
    """
    Run the FPT procedure for the parameter.

    Raises:
        UnsupportedParameterError: the Large problem is para-NP-hard for it
    """
    param = ParameterId(param)
    solver = FPT_SOLVERS.get(param)
    if solver is None:
        raise UnsupportedParameterError(
            f"no FPT procedure for {param}: the Large problem is "
            f"{PARAMETERS[param].large_class} for it"
        )
    return solver(graph, k, ell, m)


# ---------------------------------------------------------------------------
# Checking answers
# ---------------------------------------------------------------------------


def verify_answer(graph: Graph, instance: ProblemInstance, answer: Answer) -> bool:
    """
    Re-check a witness from scratch: S is a set of vertices of G, |S| <= m when
    m is given, and G∖S is k-partite with parameter value <= ℓ.
    """
    if answer.witness is None:
        return False
    deleted = answer.witness
    if len(set(deleted)) != len(deleted) or any(not 0 <= v < graph.n for v in deleted):
        return False
    if instance.m is not None and len(deleted) > instance.m:
        return False

    remainder = delete_vertices(graph, deleted)
    if not is_defined(instance.param, remainder):
        return False
    if evaluate(instance.param, remainder) > instance.ell:
        return False
    coloring = is_k_partite(remainder, instance.k)
    return coloring is not None and coloring.is_proper(remainder)


def compare_with_oracle(
    graph: Graph,
    param: ParameterId,
    k: int,
    ell: int,
    m: int,
    solver: Optional[Solver] = None,
) -> dict:
    """
    Run an FPT procedure and the oracle on one instance.

    Disagreements are logged at WARNING with the instance in graph6 so they can
    be replayed.

    Returns:
        Record with keys graph6, parameter, k, ell, m, fpt, oracle, agree.
    """
    from ..data.formats import emit_graph6

    param = ParameterId(param)
    run = solver if solver is not None else partial(large_fpt_decide, param=param)
    fpt = run(graph, k=k, ell=ell, m=m)
    oracle = large_ikpsp_oracle(graph, param, k, ell, m)
    encoded = emit_graph6(graph)
    agree = fpt.verdict == oracle.verdict
    if not agree:
        logger.warning(
            "FPT/oracle divergence: graph6=%s param=%s k=%d ell=%d m=%d fpt=%s oracle=%s",
            encoded, param, k, ell, m, fpt.label, oracle.label,
        )
    return {
        "graph6": encoded,
        "parameter": param.value,
        "k": k,
        "ell": ell,
        "m": m,
        "fpt": fpt.label,
        "oracle": oracle.label,
        "agree": agree,
    }


def divergence_ledger(
    instances: Iterable[ProblemInstance], solver: Optional[Solver] = None
) -> pd.DataFrame:
    """compare_with_oracle over many Large problem instances, one row each."""
    columns = ["graph6", "parameter", "k", "ell", "m", "fpt", "oracle", "agree"]
    rows = []
    for instance in instances:
        if instance.m is None:
            raise ValueError("divergence_ledger needs Large problem instances (m set)")
        rows.append(compare_with_oracle(
            instance.graph, instance.param, instance.k, instance.ell, instance.m, solver
        ))
    return pd.DataFrame(rows, columns=columns)
