"""Command-line front end.

Subcommands: ``eval`` (value of a series), ``partial`` (exact partial sum),
``oracle`` (verify the closed form against brute force, or cross-check the
standard part against an iterated Cesaro mean with ``--holder``).  When the
expression argument is omitted, expressions are read one per line from
standard input and processed in order.

Exit codes: 0 success, 1 a verification check failed, 2 usage, parse or
evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import OmegasumError
from .hyperreal import Hyperreal
from .oracle import check_formula, standard_part_crosscheck
from .series import SeriesExpr
from .summation import (
    DEFAULT_MAX_DEGREE,
    EvalConfig,
    partial_sum_formula,
    sum_series,
)
from .syntax import format_hyperreal, parse_series
from .oracle import brute_partial_sum

__all__ = ["run_cli", "main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omegasum",
        description="Assign exact hyperreal values to infinite series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="sum a series and print its hyperreal value")
    ev.add_argument("expr", nargs="?", help="series expression; stdin lines if omitted")
    ev.add_argument("--json", action="store_true", help="emit one JSON object per input")
    which = ev.add_mutually_exclusive_group()
    which.add_argument("--principal", action="store_true", help="print the principal value")
    which.add_argument("--std", action="store_true", help="print the standard part, or 'none'")
    ev.add_argument(
        "--neg-base-mode",
        choices=["error", "conjecture"],
        default="error",
        help="how to treat geometric bases in (-1, 0) at omega",
    )
    ev.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)

    pa = sub.add_parser("partial", help="print an exact partial sum")
    pa.add_argument("expr", nargs="?")
    pa.add_argument("--n", type=int, required=True, help="upper index of the partial sum")
    pa.add_argument("--json", action="store_true")

    orc = sub.add_parser("oracle", help="verify the closed form by brute force")
    orc.add_argument("expr", nargs="?")
    orc.add_argument("--N", type=int, default=200, dest="N", help="window size / mean length")
    orc.add_argument(
        "--holder",
        type=int,
        default=None,
        metavar="K",
        help="instead cross-check the standard part against the Holder-K mean",
    )
    orc.add_argument("--tol", type=float, default=1e-3, help="tolerance for --holder")
    orc.add_argument("--json", action="store_true")
    orc.add_argument("--neg-base-mode", choices=["error", "conjecture"], default="error")
    orc.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    return parser


def _value_json(text: str, value: Hyperreal) -> dict:
    std = value.standard_part()
    return {
        "input": text,
        "value": format_hyperreal(value),
        "principal": format_hyperreal(value.principal_value()),
        "standardPart": None if std is None else str(std),
        "terms": [
            {"coeff": str(t.coeff), "base": str(t.base), "power": t.power}
            for t in value.terms
        ],
    }


def _run_eval(args, text: str) -> int:
    config = EvalConfig(args.neg_base_mode, args.max_degree)
    value = sum_series(parse_series(text), config)
    if args.json:
        print(json.dumps(_value_json(text, value)))
    elif args.principal:
        print(format_hyperreal(value.principal_value()))
    elif args.std:
        std = value.standard_part()
        print("none" if std is None else str(std))
    else:
        print(format_hyperreal(value))
    return 0


def _run_partial(args, text: str) -> int:
    total = brute_partial_sum(parse_series(text), args.n)
    if args.json:
        print(json.dumps({"input": text, "n": args.n, "partialSum": str(total)}))
    else:
        print(total)
    return 0


def _run_oracle(args, text: str) -> int:
    series = parse_series(text)
    config = EvalConfig(args.neg_base_mode, args.max_degree)
    if args.holder is not None:
        report = standard_part_crosscheck(series, args.holder, args.N, args.tol, config)
        detail = f"holder-{args.holder} mean over {args.N} partial sums"
    else:
        formula = partial_sum_formula(series, args.max_degree)
        report = check_formula(series, args.N, formula=formula, series_id=text)
        lo, hi = report.checked_range
        detail = f"formula vs brute force on [{lo}, {hi}]"
    if args.json:
        print(json.dumps(report.to_json()))
    elif report.passed:
        print(f"pass: {detail}")
    else:
        n, expected, got = report.first_mismatch
        print(f"fail: {detail}; first mismatch at n={n}: expected {expected}, got {got}")
    return 0 if report.passed else 1


_RUNNERS = {"eval": _run_eval, "partial": _run_partial, "oracle": _run_oracle}


def _run_line(args, text: str, label: str = "") -> int:
    try:
        return _RUNNERS[args.command](args, text)
    except ValueError as exc:
        print(f"error: {label}{exc}", file=sys.stderr)
        return 2
    except OmegasumError as exc:
        print(f"error: {label}{exc}", file=sys.stderr)
        if args.json:
            print(json.dumps({"input": text, "error": str(exc)}))
        return 2


def run_cli(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.expr is not None:
        return _run_line(args, args.expr)
    worst = 0
    for lineno, raw in enumerate(sys.stdin, start=1):
        line = raw.strip()
        if not line:
            continue
        worst = max(worst, _run_line(args, line, label=f"line {lineno}: "))
    return worst


def main() -> None:
    sys.exit(run_cli())
