"""
Main entry point for the impart command line.
Builds the argparse front end and maps errors onto exit codes.
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

# Add project root to path for direct execution (e.g., python impart/main.py)
_project_root = Path(__file__).parent.parent
if str(_project_root) not in sys.path:
    sys.path.insert(0, str(_project_root))

from impart.algorithms.imgp import ParameterId
from impart.cli import commands
from impart.cli.report import RunReport
from impart.config import (
    DEFAULT_SEED,
    EXIT_CEILING,
    EXIT_INPUT,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_USAGE,
)
from impart.data.formats import FORMATS
from impart.data.generators import GENERATORS
from impart.exceptions import (
    CeilingExceededError,
    ImpartError,
    UnsupportedParameterError,
    WitnessRejectedError,
)

logger = logging.getLogger("impart")

PARAMETER_TAGS = [p.value for p in ParameterId]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="edgelist",
                        help="graph text format for input and output")
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--timing", action="store_true", help="include wall_time_ms in the report")
    common.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="impart",
        description="Induced multipartite graph parameters: exact solvers and reductions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, with_file: bool = True) -> argparse.ArgumentParser:
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.set_defaults(handler=handler)
        if with_file:
            command.add_argument("file", nargs="?", help="input graph (standard input if omitted)")
        return command

    def decision_options(command: argparse.ArgumentParser, with_m: bool) -> None:
        command.add_argument("--param", choices=PARAMETER_TAGS, required=True)
        command.add_argument("--k", type=int, required=True)
        command.add_argument("--ell", type=int, required=True)
        if with_m:
            command.add_argument("--m", type=int, required=True)

    param = add("param", commands.cmd_param, "compute one parameter", with_file=False)
    param.add_argument("tag", choices=PARAMETER_TAGS)
    param.add_argument("file", nargs="?", help="input graph (standard input if omitted)")

    pk = add("pk", commands.cmd_pk, "compute p(G, k) by brute force")
    pk.add_argument("--param", choices=PARAMETER_TAGS, required=True)
    pk.add_argument("--k", type=int, required=True)

    decision_options(add("ikpsp", commands.cmd_ikpsp, "decide p(G, k) <= ell"), with_m=False)
    decision_options(
        add("large-oracle", commands.cmd_large_oracle, "Large problem by brute force"), with_m=True
    )
    decision_options(
        add("large-fpt", commands.cmd_large_fpt, "Large problem by its FPT procedure"), with_m=True
    )

    reduce = add("reduce", commands.cmd_reduce, "build a reduced instance", with_file=False)
    reduce.add_argument("mode", choices=["lex", "tmd4"])
    reduce.add_argument("file", nargs="?", help="input graph (standard input if omitted)")
    reduce.add_argument("--param", choices=PARAMETER_TAGS, required=True)
    reduce.add_argument("--k", type=int)
    reduce.add_argument("--m", type=int)

    thm1 = add("verify-thm1", commands.cmd_verify_thm1, "check p(G_k, k) = f_k(alpha(G))")
    thm1.add_argument("--param", choices=PARAMETER_TAGS, required=True)
    thm1.add_argument("--k", type=int, required=True)

    generate = add("gen", commands.cmd_gen, "generate a graph", with_file=False)
    generate.add_argument("kind", choices=sorted(GENERATORS))
    generate.add_argument("--n", type=int)
    generate.add_argument("--p", type=float)
    generate.add_argument("--k", type=int)
    generate.add_argument("--budget", type=int)
    generate.add_argument("--seed", type=int, default=DEFAULT_SEED)

    table = add("table", commands.cmd_table, "formula table on K_{n|k}", with_file=False)
    table.add_argument("--k", type=int, nargs="+", default=[2, 3, 4])
    table.add_argument("--n", type=int, nargs="+", default=[1, 2, 3, 4])
    table.add_argument("--param", choices=PARAMETER_TAGS, nargs="+")

    return parser


def _fail(code: int, exc: BaseException) -> int:
    print(f"impart: error: {exc}", file=sys.stderr)
    return code


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command and print its output.

    Returns:
        Exit status: 0 success, 1 internal error (including a rejected
        witness), 2 usage error, 3 input error, 4 computation ceiling exceeded.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    logging.basicConfig(format="%(levelname)s: %(message)s", level=args.log_level)
    args.argv = argv
    logger.info("running %s", args.command)

    start = time.perf_counter()
    try:
        output = args.handler(args)
    except CeilingExceededError as exc:
        return _fail(EXIT_CEILING, exc)
    except WitnessRejectedError as exc:
        return _fail(EXIT_INTERNAL, exc)
    except UnsupportedParameterError as exc:
        return _fail(EXIT_USAGE, exc)
    except (ImpartError, OSError) as exc:
        return _fail(EXIT_INPUT, exc)
    except ValueError as exc:
        return _fail(EXIT_USAGE, exc)

    elapsed_ms = (time.perf_counter() - start) * 1000.0
    logger.info("%s finished in %.1f ms", args.command, elapsed_ms)

    if isinstance(output, RunReport):
        output.wall_time_ms = round(elapsed_ms, 3)
        output = output.render(as_json=args.json, timing=args.timing)
    sys.stdout.write(output)
    return EXIT_OK


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
