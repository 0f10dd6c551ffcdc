"""Batch command-line front end.

Subcommands: hilbert (counting series), count (hook partitions of n),
hookschur (hook Schur polynomial expansion), verify (identity checks).
Exit codes: 0 success / all checks pass, 1 some identity check failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hilbert as hb
from .partitions import Partition, enumerate_hook
from .qseries import DEFAULT_ORDER, TruncSeries
from .symfun import hook_schur

_SUITES = ("all", "lemma", "theorem", "tbinomial", "vandermonde", "intermediate")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_partition(text: str) -> Partition:
    """Parse comma-separated decreasing parts; empty string is the empty
    partition. Non-decreasing input is rejected, not sorted."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(piece) for piece in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return Partition(parts)


def _require_nonnegative(**named: int):
    for name, value in named.items():
        if value < 0:
            raise ValueError(f"{name} must be non-negative, got {value}")


def _print_series(series: TruncSeries, fmt: str):
    if fmt == "json":
        print(_dumps(series.to_json()))
    elif fmt == "csv":
        for e, c in enumerate(series.coeffs):
            print(f"{e},{c}")
    else:
        print(series)


def cmd_hilbert(args) -> int:
    _require_nonnegative(k=args.k, l=args.l, N=args.order)
    _print_series(hb.hilbert_series(args.k, args.l, args.order), args.format)
    return 0


def cmd_count(args) -> int:
    _require_nonnegative(n=args.n, k=args.k, l=args.l)
    matches = list(enumerate_hook(args.n, args.k, args.l))
    if args.list:
        for p in matches:
            print(p)
    else:
        print(len(matches))
    return 0


def cmd_hookschur(args) -> int:
    _require_nonnegative(k=args.k, l=args.l)
    poly = hook_schur(_parse_partition(args.partition), args.k, args.l)
    if args.format == "json":
        print(_dumps(poly.to_json()))
    else:
        print(poly)
    return 0


def _sweep(suite: str, max_k: int, max_l: int, order: int):
    """Yield reports for one suite over its parameter grid, in order."""
    if suite == "lemma":
        for k in range(max_k + 1):
            for l in range(max_l + 1):
                yield hb.verify_closed_form(k, l)
    elif suite == "theorem":
        for k in range(max_k + 1):
            for l in range(max_l + 1):
                yield from hb.verify_hilbert_series(k, l, order)
    elif suite == "tbinomial":
        yield from hb.verify_tbinomial_identities(max_k)
    elif suite == "vandermonde":
        for k in range(max_k + 1):
            for l in range(max_l + 1):
                yield hb.verify_qvandermonde(k, l)
    elif suite == "intermediate":
        for k in range(1, max_k + 1):
            for l in range(2, max_l + 1):
                yield from hb.verify_intermediate_expansion(k, l)
    else:
        for sub in ("tbinomial", "lemma", "vandermonde", "intermediate", "theorem"):
            yield from _sweep(sub, max_k, max_l, order)


def _report_line(report: hb.VerificationReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    params = " ".join(f"{name}={value}" for name, value in report.params.items())
    line = f"{status} {report.identity} {params}"
    if report.first_mismatch is not None:
        fm = report.first_mismatch
        line += f" mismatch at t^{fm.exponent}: lhs={fm.lhs} rhs={fm.rhs}"
    return line


def cmd_verify(args) -> int:
    _require_nonnegative(N=args.order)
    max_k = args.max_k
    if max_k is None:
        max_k = 12 if args.suite == "tbinomial" else 5
    max_l = args.max_l if args.max_l is not None else 5
    for name, value in (("--max-k", max_k), ("--max-l", max_l)):
        if value < 0:
            raise ValueError(f"{name} must be non-negative, got {value}")
    all_pass = True
    for report in _sweep(args.suite, max_k, max_l, args.order):
        all_pass = all_pass and report.passed
        if args.format == "json":
            print(_dumps(report.to_json()))
        else:
            print(_report_line(report))
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookcomb",
        description="Exact hook-partition counting series, hook Schur polynomials, "
        "and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hil = sub.add_parser("hilbert", help="counting series for the (k,l)-hook")
    p_hil.add_argument("-k", type=int, required=True, help="number of wide rows")
    p_hil.add_argument("-l", type=int, required=True, help="column width bound")
    p_hil.add_argument(
        "-N", dest="order", type=int, default=DEFAULT_ORDER, help="truncation order"
    )
    p_hil.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p_hil.set_defaults(func=cmd_hilbert)

    p_cnt = sub.add_parser("count", help="count hook partitions of n")
    p_cnt.add_argument("-n", type=int, required=True, help="partition size")
    p_cnt.add_argument("-k", type=int, required=True)
    p_cnt.add_argument("-l", type=int, required=True)
    p_cnt.add_argument(
        "--list", action="store_true", help="list the partitions instead of counting"
    )
    p_cnt.set_defaults(func=cmd_count)

    p_hs = sub.add_parser("hookschur", help="expand a hook Schur polynomial")
    p_hs.add_argument(
        "-p",
        dest="partition",
        required=True,
        help="partition as comma-separated decreasing parts, e.g. 3,1,1",
    )
    p_hs.add_argument("-k", type=int, required=True, help="number of x variables")
    p_hs.add_argument("-l", type=int, required=True, help="number of y variables")
    p_hs.add_argument("--format", choices=("plain", "json"), default="plain")
    p_hs.set_defaults(func=cmd_hookschur)

    p_ver = sub.add_parser("verify", help="run identity checks over a parameter grid")
    p_ver.add_argument("suite", choices=_SUITES)
    p_ver.add_argument("--max-k", type=int, default=None)
    p_ver.add_argument("--max-l", type=int, default=None)
    p_ver.add_argument(
        "-N", dest="order", type=int, default=DEFAULT_ORDER, help="truncation order"
    )
    p_ver.add_argument("--format", choices=("plain", "json"), default="plain")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
