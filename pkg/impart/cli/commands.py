"""
Subcommand handlers.

Each handler takes the parsed argparse namespace and returns either a
RunReport or ready-made text (gen and table). Any yes-verdict witness is
re-checked with verify_answer before it is reported.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Union

from ..algorithms.decompositions import pathwidth, treewidth
from ..algorithms.graph import Graph
from ..algorithms.imgp import ParameterId, evaluate, lemma_table, p_of_G_k
from ..algorithms.parameters import independence_number
from ..algorithms.reductions import mss_to_ikpsp, theorem1_sides, tmd4_to_large
from ..algorithms.solvers import (
    Answer,
    ProblemInstance,
    ikpsp_decide,
    large_fpt_decide,
    large_ikpsp_oracle,
    verify_answer,
)
from ..data.formats import emit_graph6, read_graph, write_graph
from ..data.generators import gen
from ..exceptions import WitnessRejectedError
from .report import RunReport

logger = logging.getLogger(__name__)

Output = Union[RunReport, str]


def load_graph(args) -> Graph:
    """Read the input graph from args.file, or standard input when absent."""
    if args.file is None:
        text = sys.stdin.read()
    else:
        text = Path(args.file).read_text()
    graph = read_graph(text, args.format)
    logger.debug("read %s graph with %d vertices and %d edges", args.format, graph.n, graph.size)
    return graph


def _describe(graph: Graph, **extra) -> dict:
    description = {"order": graph.n, "size": graph.size, "graph6": emit_graph6(graph)}
    description.update({key: value for key, value in extra.items() if value is not None})
    return description


def _gated(graph: Graph, instance: ProblemInstance, answer: Answer) -> Answer:
    if answer.verdict and answer.witness is not None:
        if not verify_answer(graph, instance, answer):
            raise WitnessRejectedError(f"witness {list(answer.witness)} failed re-checking")
    return answer


def _decision_report(args, graph: Graph, instance: ProblemInstance, answer: Answer) -> RunReport:
    answer = _gated(graph, instance, answer)
    return RunReport(
        command=args.argv,
        instance=_describe(
            graph, parameter=instance.param.value, k=instance.k, ell=instance.ell, m=instance.m
        ),
        verdict=answer.label,
        value=answer.trace.value,
        witness=None if answer.witness is None else list(answer.witness),
        trace=answer.trace.to_dict(),
    )


def cmd_param(args) -> Output:
    graph = load_graph(args)
    param = ParameterId(args.tag)
    value = evaluate(param, graph)

    witness = None
    trace = None
    if param is ParameterId.INDEPENDENCE_NUMBER:
        witness = list(independence_number(graph)[1])
    elif param is ParameterId.TREEWIDTH:
        decomposition = treewidth(graph)[1]
        trace = {"bags": [list(b) for b in decomposition.bags],
                 "tree_edges": [list(e) for e in decomposition.tree_edges]}
    elif param is ParameterId.PATHWIDTH:
        trace = {"bags": [list(b) for b in pathwidth(graph)[1].bags]}

    return RunReport(
        command=args.argv,
        instance=_describe(graph, parameter=param.value),
        value=value,
        witness=witness,
        trace=trace,
    )


def cmd_pk(args) -> Output:
    graph = load_graph(args)
    param = ParameterId(args.param)
    value, kept = p_of_G_k(graph, param, args.k)
    return RunReport(
        command=args.argv,
        instance=_describe(graph, parameter=param.value, k=args.k),
        value=value,
        witness=list(kept),
    )


def cmd_ikpsp(args) -> Output:
    graph = load_graph(args)
    instance = ProblemInstance(graph, args.param, args.k, args.ell)
    answer = ikpsp_decide(graph, instance.param, args.k, args.ell)
    return _decision_report(args, graph, instance, answer)


def cmd_large_oracle(args) -> Output:
    graph = load_graph(args)
    instance = ProblemInstance(graph, args.param, args.k, args.ell, args.m)
    answer = large_ikpsp_oracle(graph, instance.param, args.k, args.ell, args.m)
    return _decision_report(args, graph, instance, answer)


def cmd_large_fpt(args) -> Output:
    graph = load_graph(args)
    instance = ProblemInstance(graph, args.param, args.k, args.ell, args.m)
    answer = large_fpt_decide(graph, instance.param, args.k, args.ell, args.m)
    return _decision_report(args, graph, instance, answer)


def cmd_reduce(args) -> Output:
    graph = load_graph(args)
    if args.mode == "lex":
        if args.k is None or args.m is None:
            raise ValueError("reduce lex needs --k and --m")
        reduced = mss_to_ikpsp(graph, args.m, args.k, args.param)
    else:
        reduced = tmd4_to_large(graph, args.param)

    instance = reduced.instance
    return RunReport(
        command=args.argv,
        instance=_describe(
            reduced.produced,
            parameter=instance.param.value,
            k=instance.k,
            ell=instance.ell,
            m=instance.m,
            encoded=write_graph(reduced.produced, args.format),
        ),
        value=reduced.threshold,
        trace=dict(reduced.provenance),
    )


def cmd_verify_thm1(args) -> Output:
    graph = load_graph(args)
    alpha, lhs, rhs = theorem1_sides(graph, args.k, args.param)
    return RunReport(
        command=args.argv,
        instance=_describe(graph, parameter=ParameterId(args.param).value, k=args.k),
        verdict="yes" if lhs == rhs else "no",
        value=lhs,
        trace={"alpha": alpha, "lhs": lhs, "rhs": rhs},
    )


def cmd_gen(args) -> Output:
    params = {
        key: getattr(args, key)
        for key in ("n", "p", "k", "budget")
        if getattr(args, key) is not None
    }
    graph = gen(args.kind, seed=args.seed, **params)
    if not args.json:
        return write_graph(graph, args.format)
    return RunReport(
        command=args.argv,
        instance=_describe(graph, kind=args.kind, seed=args.seed),
        value=write_graph(graph, args.format),
    )


def cmd_table(args) -> Output:
    table = lemma_table(args.k, args.n, args.param)
    if not args.json:
        return table.to_string(index=False) + "\n"
    return RunReport(
        command=args.argv,
        instance={"k": list(args.k), "n": list(args.n)},
        verdict="yes" if bool(table["match"].all()) else "no",
        value=json.loads(table.to_json(orient="records")),
    )
