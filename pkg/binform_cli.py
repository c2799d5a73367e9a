"""
Command-line front end for the binary-forms engine.

Verbs:
    poly        render an Appell polynomial
    build       render a catalog construction
    check       classify a coefficient polynomial (semi-invariant, weight, ord, ...)
    verify      substitute an Appell assignment into a construction and report the norm
    scan        norm table over a range of orders, as JSON
    conjecture  evaluate a conjectured norm formula as printed
    binomial    evaluate the binomial sums obtained from the ones vector

Exit codes: 0 success, 1 verification mismatch, 2 any engine or usage error.

Examples:
    python binform_cli.py poly --family B --degree 2
    python binform_cli.py verify --construction discr --order 3 --assign a=B --expect 1/16
    python binform_cli.py scan --construction dv2 --assign a=B b=E --from 1 --to 4 --jobs 2
"""
import argparse
import json
import logging
import os
import re
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from pydantic import ValidationError

from error_handling import BinformError, UsageError, handle_errors, load_config, setup_logging
from exact_poly import FORMATS, format_polynomial, parse_polynomial, parse_rational
from forms import FormContext, classify
from catalog import CatalogEntry, build
from appell import (
    binomial_check,
    conjecture_check,
    format_assignment,
    get_family,
    norm_table,
    parse_assignment,
    save_families,
    verify_identity,
)

logger = logging.getLogger("binform.cli")

SUCCESS = 0
MISMATCH = 1

_NEGATIVE_NUMBER = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad flags as UsageError so they share the error path.

    Negative rationals such as -1/4 are values, not option flags.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_NUMBER

    def error(self, message: str):
        raise UsageError(message)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _dump(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _emit(text: str, out: Optional[str] = None) -> None:
    if out and out != "-":
        Path(out).write_text(text + "\n")
        logger.info(f"wrote {out}")
    else:
        print(text)


def _entry_payload(entry: CatalogEntry, style: str) -> dict:
    return {
        "construction": entry.key,
        "n": entry.n,
        "series": list(entry.series),
        "polynomial": format_polynomial(entry.poly, style),
        "notes": list(entry.notes),
        "verdicts": {label: verdict.model_dump(mode="json") for label, verdict in sorted(entry.verdicts.items())},
    }


# Verbs

def cmd_poly(args: argparse.Namespace) -> int:
    if args.degree < 0:
        raise UsageError(f"--degree must be >= 0, got {args.degree}")
    print(format_polynomial(get_family(args.family).poly(args.degree), args.format))
    return SUCCESS


def cmd_build(args: argparse.Namespace) -> int:
    entry = build(args.construction, args.order, args.series)
    if args.format == "json":
        payload = _entry_payload(entry, "plain")
        payload["polynomial"] = json.loads(format_polynomial(entry.poly, "json"))
        _emit(_dump(payload), args.out)
        return SUCCESS
    _emit(format_polynomial(entry.poly, args.format), args.out)
    for label, verdict in sorted(entry.verdicts.items()):
        print(f"# {label}: {verdict.summary()}", file=sys.stderr)
    for note in entry.notes:
        print(f"# {note}", file=sys.stderr)
    return SUCCESS


def _read_expression(source: str) -> str:
    path = Path(source)
    if path.is_file():
        return path.read_text()
    return source


def cmd_check(args: argparse.Namespace) -> int:
    text = _read_expression(args.expr)
    poly = parse_polynomial(text, max_index=args.order)
    ctx = FormContext.for_polynomial(args.order, poly)
    result = classify(poly, ctx)
    if args.format == "json":
        print(_dump(result.model_dump(mode="json")))
        return SUCCESS
    print(f"semi-invariant: {_yes(result.semi_invariant)}")
    print(f"invariant: {_yes(result.invariant)}")
    print(f"covariant: {_yes(result.covariant)}")
    print(f"degree: {result.degree if result.degree is not None else 'not homogeneous'}")
    print(f"weight: {result.weight if result.weight is not None else 'not isobaric'}")
    if result.order is not None:
        print(f"ord: {result.order}")
    print(f"proper: {_yes(result.proper)}")
    if result.d_image is not None:
        print(f"D-image: {result.d_image}")
    return SUCCESS


def cmd_verify(args: argparse.Namespace) -> int:
    assignment = parse_assignment(args.assign)
    expected = parse_rational(args.expect) if args.expect is not None else None
    entry = build(args.construction, args.order, args.series)
    report = verify_identity(entry, assignment, construction=args.construction, n=args.order, expected=expected)
    if args.format == "json":
        print(_dump(report.model_dump(mode="json")))
    else:
        line = f"{args.construction} n={args.order} {format_assignment(assignment)}: constant={_yes(report.constant)}"
        if report.constant:
            line += f" norm={report.norm}"
        if report.expected is not None:
            line += f" expected={report.expected}"
        line += " PASS" if report.passed else " FAIL"
        print(line)
        if not report.constant:
            print(f"image: {report.image}")
        if report.status != "ok":
            print(f"status: {report.status}")
    return SUCCESS if report.passed else MISMATCH


def cmd_scan(args: argparse.Namespace) -> int:
    assignment = parse_assignment(args.assign)
    rows = norm_table(args.construction, assignment, args.n_from, args.n_to, jobs=args.jobs)
    _emit(_dump([row.model_dump(mode="json") for row in rows]), args.out)
    return SUCCESS


def cmd_conjecture(args: argparse.Namespace) -> int:
    rows = conjecture_check(args.name, args.n_from, args.n_to)
    if args.format == "json":
        _emit(_dump([row.model_dump(mode="json") for row in rows]), args.out)
    else:
        for row in rows:
            line = f"{row.name} n={row.n}: lhs={row.lhs} rhs={row.rhs} {'match' if row.match else 'MISMATCH'}"
            if row.auxiliary_label is not None:
                aux = "match" if row.auxiliary_match else "differs"
                line += f" [{row.auxiliary_label}: {row.auxiliary_rhs} {aux}]"
            print(line)
    return SUCCESS if all(row.match for row in rows) else MISMATCH


def cmd_binomial(args: argparse.Namespace) -> int:
    rows = binomial_check(args.which, args.n_from, args.n_to)
    if args.format == "json":
        _emit(_dump([row.model_dump(mode="json") for row in rows]), args.out)
    else:
        for row in rows:
            if row.status != "ok":
                print(f"{row.which} n={row.n}: {row.status}")
            else:
                print(f"{row.which} n={row.n}: {row.value} {'zero' if row.zero else 'NONZERO'}")
    return SUCCESS if all(row.zero for row in rows if row.status == "ok") else MISMATCH


# Parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="binform", description="Exact semi-invariants of binary forms and Appell identities.")
    parser.add_argument("--log-level", default=None, help="Override BINFORM_LOG_LEVEL")
    parser.add_argument("--log-format", choices=["text", "json"], default=None, help="Override BINFORM_LOG_FORMAT")
    parser.add_argument("--debug-checks", action="store_true", help="Enable the iterated-D* and determinant cross-checks")
    parser.add_argument("--env-file", default=None, help="Load environment from this .env file")
    verbs = parser.add_subparsers(dest="verb", parser_class=_Parser)
    verbs.required = True

    p = verbs.add_parser("poly", help="Render A_k(x) of an Appell family")
    p.add_argument("--family", required=True, help="B, E, H or T")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=list(FORMATS), default="plain")
    p.set_defaults(handler=cmd_poly)

    p = verbs.add_parser("build", help="Render a catalog construction")
    p.add_argument("--construction", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--series", nargs="+", default=None)
    p.add_argument("--format", choices=list(FORMATS), default="plain")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_build)

    p = verbs.add_parser("check", help="Classify a coefficient polynomial")
    p.add_argument("--expr", required=True, help="Expression text or a file containing it")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_check)

    p = verbs.add_parser("verify", help="Verify an Appell identity for one construction and order")
    p.add_argument("--construction", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--assign", nargs="+", required=True, metavar="SERIES=FAMILY")
    p.add_argument("--series", nargs="+", default=None)
    p.add_argument("--expect", default=None, help="Expected norm as p or p/q")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_verify)

    p = verbs.add_parser("scan", help="Norm table over a range of orders")
    p.add_argument("--construction", required=True)
    p.add_argument("--assign", nargs="+", required=True, metavar="SERIES=FAMILY")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None, help="Worker processes (default BINFORM_JOBS)")
    p.add_argument("--out", default="-")
    p.set_defaults(handler=cmd_scan)

    p = verbs.add_parser("conjecture", help="Evaluate a conjectured norm formula")
    p.add_argument("--name", required=True, help="euler-dv, hermite-discr or be-dv")
    p.add_argument("--from", dest="n_from", type=int, default=None)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_conjecture)

    p = verbs.add_parser("binomial", help="Evaluate a binomial identity exactly")
    p.add_argument("--which", required=True, help="Catalog id whose ones-vector sum to evaluate: dv, tr, ch, tr2, trbar2, trbar2-corrected or ch4")
    p.add_argument("--from", dest="n_from", type=int, default=1)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_binomial)

    return parser


def _configure(args: argparse.Namespace):
    """Environment first, flags on top; a bad value in either is a usage error."""
    try:
        config = load_config(
            env_file=args.env_file,
            log_level=args.log_level.upper() if args.log_level else None,
            log_format=args.log_format,
            debug_checks=True if args.debug_checks else None,
            jobs=getattr(args, "jobs", None),
        )
        setup_logging(config)
    except (ValidationError, ValueError) as exc:
        raise UsageError(f"invalid configuration: {exc}") from exc
    return config


@handle_errors(error_class=BinformError)
def _dispatch(args: argparse.Namespace) -> int:
    return args.handler(args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        config = _configure(args)
        if config.debug_checks:
            os.environ["BINFORM_DEBUG_CHECKS"] = "true"
        if hasattr(args, "jobs"):
            args.jobs = config.jobs
        code = _dispatch(args)
    except BinformError as exc:
        print(f"error [{exc.code.value}]: {exc.message}", file=sys.stderr)
        return exc.exit_code
    if config.cache_dir:
        save_families(config.cache_dir)
    return code


if __name__ == "__main__":
    sys.exit(main())
