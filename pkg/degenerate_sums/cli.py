"""
The degenerate-sums command line: emit triangles, evaluate polynomial
families and run the verification suites.

Exit codes are 0 when everything passed, 1 when a verification failed
unexpectedly and 2 on usage errors or when a computation broke off.
"""

import typing as T

import argparse
import json
import sys
import traceback

import voluptuous as vol
import voluptuous.humanize  # pylint: disable=unused-import

from . import __version__, appell, common, config, eulerian, wire
from .algebra import Poly, at_lambda
from .identities import IdentityResult, get_identity_types
from .identities.suite import SuiteRunner
from .identities.tables import TRIANGLE_BUILDERS
from .stirling import Family


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# verify flags that end up in the suite configuration
CONFIG_FLAGS = (
    ("alpha_max", "alpha_max"),
    ("m_max", "m_max"),
    ("n_max", "n_max"),
    ("samples", "sample_count"),
    ("seed", "seed"),
    ("egf_order", "egf_order"),
)


def build_parser() -> argparse.ArgumentParser:
    """Returns the argument parser with its three sub-commands."""

    common_args = argparse.ArgumentParser(add_help=False)
    common_args.add_argument(
        "--debug", action="store_true", help="log the progress of computations"
    )

    parser = argparse.ArgumentParser(
        prog="degenerate-sums",
        description="Degenerate Stirling, Bernoulli, Frobenius-Euler and "
        "Eulerian numbers with exact identity verification.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s {}".format(__version__)
    )
    subparsers = parser.add_subparsers(dest="command")

    table = subparsers.add_parser(
        "table", parents=[common_args], help="emit a triangle of numbers"
    )
    table.add_argument("--family", required=True, help="s1, s2, bracket or eulerian")
    table.add_argument("--rows", required=True, type=int, help="last row to emit")
    table.add_argument("--lambda", dest="lambda_", help="evaluate at this lambda")
    table.add_argument("--format", default="json", help="json or csv")

    evaluate = subparsers.add_parser(
        "eval", parents=[common_args], help="print a polynomial of a family"
    )
    evaluate.add_argument(
        "--family", required=True, help="bernoulli, frobenius, eulerian-poly or carlitz"
    )
    evaluate.add_argument("--n", required=True, type=int, help="index of the polynomial")
    evaluate.add_argument("--u", help="parameter of the frobenius family")
    evaluate.add_argument("--x", help="evaluate at this x")
    evaluate.add_argument("--lambda", dest="lambda_", help="evaluate at this lambda")
    evaluate.add_argument("--format", default="text", help="text or json")

    verify = subparsers.add_parser(
        "verify", parents=[common_args], help="verify the identities"
    )
    verify.add_argument("--suite", default="all", help="suite to run")
    verify.add_argument("--seed", type=int, help="seed of the sampled parameters")
    verify.add_argument("--alpha-max", type=int)
    verify.add_argument("--m-max", type=int)
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--samples", type=int, help="sampled rationals per kind")
    verify.add_argument("--egf-order", type=int)
    verify.add_argument("--report", help="JSONL report file, stdout by default")
    verify.add_argument(
        "--list", action="store_true", help="list the registered identities and exit"
    )

    return parser


def _drop_unset(args: T.Dict[str, T.Any]) -> T.Dict[str, T.Any]:
    return {key: value for key, value in args.items() if value is not None}


def _write_json(stream: T.TextIO, data: T.Any) -> None:
    stream.write(json.dumps(data))
    stream.write("\n")


def cmd_table(args: argparse.Namespace, out: T.TextIO) -> int:
    """Emits a triangle, symbolic in lambda or evaluated."""

    raw = _drop_unset(
        {
            "family": args.family,
            "rows": args.rows,
            "lambda": args.lambda_,
            "format": args.format,
        }
    )
    opts = config.TABLE_ARGS_SCHEMA(raw)
    family = opts["family"]  # type: Family

    triangle = TRIANGLE_BUILDERS[family](opts["rows"])
    common.log("Built {!r}.".format(triangle), level="DEBUG")
    rows = []  # type: T.List[T.List[T.Any]]
    if opts["lambda"] is None:
        rows = [list(triangle.row(n)) for n in range(triangle.size + 1)]
    else:
        rows = triangle.evaluate(opts["lambda"])

    if opts["format"] == "csv":
        wire.write_csv_rows(out, rows)
    else:
        _write_json(out, wire.triangle_json(family.value, rows))
    return EXIT_OK


def _family_poly(family: str, n: int, u: T.Any) -> Poly:
    if family == "bernoulli":
        return appell.bernoulli_poly(n)
    if family == "frobenius":
        return appell.frobenius_poly(n, appell.frobenius_numbers(n, u))
    if family == "eulerian-poly":
        return eulerian.eulerian_poly_explicit(n).poly
    return eulerian.carlitz_poly(n)


def cmd_eval(args: argparse.Namespace, out: T.TextIO) -> int:
    """Prints a polynomial of a family, optionally evaluated."""

    raw = _drop_unset(
        {
            "family": args.family,
            "n": args.n,
            "u": args.u,
            "x": args.x,
            "lambda": args.lambda_,
            "format": args.format,
        }
    )
    opts = config.EVAL_ARGS_SCHEMA(raw)
    value = _family_poly(opts["family"], opts["n"], opts["u"])  # type: T.Any
    if opts["lambda"] is not None:
        value = at_lambda(value, opts["lambda"])
    if opts["x"] is not None:
        value = value(opts["x"])

    if opts["format"] == "json":
        coeffs = value.coefficients if isinstance(value, Poly) else (value,)
        record = {
            "family": opts["family"],
            "n": opts["n"],
            "coefficients": [wire.format_value(c) for c in coeffs],
        }
        _write_json(out, record)
    else:
        out.write("{}\n".format(wire.format_value(value)))
    return EXIT_OK


def _log_result(_runner: SuiteRunner, result: IdentityResult) -> None:
    if result.passed:
        common.log("{!r}".format(result), level="DEBUG")
    elif result.expected_fail:
        common.log("{!r} (expected)".format(result), level="DEBUG")
    else:
        common.log(
            "{!r}: {} != {}".format(result, result.lhs, result.rhs), level="WARNING"
        )


def cmd_verify(args: argparse.Namespace, out: T.TextIO) -> int:
    """Runs the selected suite and writes the JSONL report."""

    cfg = _drop_unset({key: getattr(args, flag) for flag, key in CONFIG_FLAGS})
    opts = config.VERIFY_ARGS_SCHEMA(
        _drop_unset(
            {"suite": args.suite, "report": args.report, "list": args.list, "config": cfg}
        )
    )

    if opts["list"]:
        for identity_type in get_identity_types():
            out.write("{}\t{}\n".format(identity_type.suite, identity_type.name))
        return EXIT_OK

    runner = SuiteRunner(opts["config"], [opts["suite"]])
    runner.events.on("result", _log_result)

    report = out
    if opts["report"] is not None:
        try:
            report = open(opts["report"], "w", encoding="utf-8", newline="\n")
        except OSError as err:
            common.log("Can't open the report: {}".format(err), level="ERROR")
            return EXIT_USAGE

    # records are written as they come, a crash keeps what was checked
    runner.events.on(
        "result", lambda _runner, result: _write_json(report, result.to_dict())
    )
    try:
        results = runner.run()
    finally:
        if report is not out:
            report.close()

    if any(result.unexpected_failure for result in results):
        return EXIT_FAILED
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "eval": cmd_eval,
    "verify": cmd_verify,
}  # type: T.Dict[str, T.Callable[[argparse.Namespace, T.TextIO], int]]


def main(argv: T.Optional[T.Sequence[str]] = None) -> int:
    """Entry point of the degenerate-sums command."""

    parser = build_parser()
    args = parser.parse_args(argv)
    common.setup_logging(getattr(args, "debug", False))

    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    common.log(
        "Running {}.".format(args.command),
        level="DEBUG",
        prefix=common.LOG_PREFIX_INCOMING,
    )
    try:
        return COMMANDS[args.command](args, sys.stdout)
    except vol.Invalid as err:
        msg = vol.humanize.humanize_error(vars(args), err)
        common.log("Invalid arguments: {}".format(msg), level="ERROR")
    except common.DegenerateSumsError as err:
        common.log("{}: {}".format(type(err).__name__, err), level="ERROR")
    except Exception as err:  # pylint: disable=broad-except
        common.log(
            "Unexpected {}: {}".format(type(err).__name__, err),
            level="ERROR",
            prefix=common.LOG_PREFIX_ALERT,
        )
        common.log(traceback.format_exc(), level="DEBUG")
    return EXIT_USAGE
