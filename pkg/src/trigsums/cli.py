"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 usage or unsupported request.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .cosecant import gcn_by_even_recurrence, gcn_by_interpolation, gcn_partition_method
from .exact import PiScaled, format_rational, parse_rational
from .oracle import PoleError, check_exact_vs_numeric, default_digits, raw_trig_sum, to_bigfloat
from .partitions import enumerate_partitions, format_partition_table, partition_count
from .sums import (
    UnsupportedSumError,
    cc_polynomial,
    cc_sum,
    dowker,
    dowker_table_polynomial,
    gardner_fisher,
    gf_table_polynomial,
    ts_sum,
)
from .symfun import sym, sym_closed_form_checks, sym_table
from .tables import KINDS, TableRow, emit_table, format_row
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("plain", "json", "latex", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs) -> None:
        # --v must never be read as an abbreviation of --vmax or --version
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message: str) -> None:  # argparse exits 2 already; keep the message terse
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def format_pi_scaled(x: PiScaled) -> str:
    """``pi^2/8``, ``3*pi^4/64``, ``-pi^2/6`` or a bare rational."""
    c, e = x.coeff, x.pi_pow
    if e == 0 or c == 0:
        return format_rational(c)
    pi = "pi" if e == 1 else f"pi^{e}"
    sign = "-" if c < 0 else ""
    num, den = abs(c.numerator), c.denominator
    head = pi if num == 1 else f"{num}*{pi}"
    return f"{sign}{head}" if den == 1 else f"{sign}{head}/{den}"


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    # SUPPRESS lets the flags appear before or after the subcommand
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--digits", type=_positive, default=argparse.SUPPRESS)
    common.add_argument("--vmax", type=_positive, default=argparse.SUPPRESS)

    parser = _Parser(prog="trigsums", parents=[common],
                     description="Exact finite trigonometric power sums and generalized cosecant numbers.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gcn", parents=[common], help="generalized cosecant numbers c_{rho,k}")
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--rho", type=_rational_arg)
    p.add_argument("--method", choices=("partition", "series", "recurrence"), default="partition")

    p = sub.add_parser("sym", parents=[common], help="symmetric functions s(v,n)")
    p.add_argument("--v", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--check", choices=("closed-forms",))

    p = sub.add_parser("sum", parents=[common], help="exact trigonometric power sums")
    p.add_argument("family", choices=("gf", "dowker", "cc", "ts"))
    p.add_argument("--m", type=_positive)
    p.add_argument("--v", type=_nonneg, required=True)
    p.add_argument("--w", type=_nonneg, default=0)
    p.add_argument("--ell", type=int, choices=(1, 2), default=1)
    p.add_argument("--decimal", type=_positive, metavar="D")
    p.add_argument("--poly", action="store_true", help="print the polynomial in m^2 instead of a value")

    p = sub.add_parser("table", parents=[common], help="reproduce the cosecant, gf or dowker table")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--max", type=_positive, default=None, dest="max_index")

    p = sub.add_parser("oracle", parents=[common], help="direct high-precision summation")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--v", type=_nonneg, required=True)
    p.add_argument("--w", type=_nonneg, default=0)
    p.add_argument("--ell", type=_positive, default=1)
    p.add_argument("--kind", choices=("csc", "csc_only", "cc", "ts"), default="csc")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")

    p = sub.add_parser("partitions", parents=[common], help="partitions of k with multiplicities")
    p.add_argument("--k", type=_nonneg, required=True)
    return parser


def _config(args: argparse.Namespace) -> dict[str, Any]:
    out = {}
    for key, value in sorted(vars(args).items()):
        if isinstance(value, Fraction):
            value = format_rational(value)
        out[key] = value
    return out


def _decimal_text(value: Decimal) -> str:
    return f"{value}…"


def _sci(value: Decimal) -> str:
    return "0" if value == 0 else f"{value:.3E}"


def cmd_gcn(args) -> tuple[Any, str, int]:
    k = args.k
    if args.method == "partition":
        poly = gcn_partition_method(k)
    elif args.method == "series":
        poly = gcn_by_interpolation(k)
    else:
        poly = gcn_by_even_recurrence(k)
    row = TableRow("cosecant", k, poly)
    if args.rho is not None:
        value = poly(args.rho)
        data = {"k": k, "rho": format_rational(args.rho), "value": format_rational(value)}
        return data, format_rational(value), EXIT_OK
    data = {"k": k, **poly.to_json()}
    text = format_row(row, latex=args.format == "latex")
    if args.format == "latex":
        text = f"c_{{\\rho,{k}}} = {text}"
    return data, text, EXIT_OK


def cmd_sym(args) -> tuple[Any, str, int]:
    if args.check:
        report = sym_closed_form_checks(max(args.v, 4))
        return report.to_json(), report.to_plain(), EXIT_OK if report.ok else EXIT_FAIL
    if args.n is not None:
        value = sym(args.v, args.n)
        return {"v": args.v, "n": args.n, "value": str(value)}, str(value), EXIT_OK
    row = sym_table(args.v).row(args.v)
    return ({"v": args.v, "row": [str(x) for x in row]},
            " ".join(str(x) for x in row), EXIT_OK)


def _sum_poly(args):
    if args.family == "gf":
        return gf_table_polynomial(args.v)
    if args.family == "dowker":
        return dowker_table_polynomial(args.v)
    if args.family == "cc":
        return cc_polynomial(args.v, args.w, args.ell)
    raise UsageError("--poly is not available for ts; use cc with ell=2")


def cmd_sum(args) -> tuple[Any, str, int]:
    if args.poly:
        poly = _sum_poly(args)
        if args.family == "cc":
            data = {"family": "cc", "v": args.v, "w": args.w, "ell": args.ell, **poly.to_json()}
            return data, str(poly), EXIT_OK
        return poly.to_json(), str(poly.poly), EXIT_OK
    if args.m is None:
        raise UsageError("--m is required unless --poly is given")
    m, v, w = args.m, args.v, args.w
    if args.family == "gf":
        exact: PiScaled | Fraction = gardner_fisher(m, v)
    elif args.family == "dowker":
        exact = dowker(m, v)
    elif args.family == "cc":
        exact = cc_sum(m, v, w, args.ell)
    else:
        exact = ts_sum(m, v, w)
    if isinstance(exact, PiScaled):
        text = format_pi_scaled(exact)
        data = {"exact": exact.to_json(), "text": text}
    else:
        text = format_rational(exact)
        data = {"exact": text}
    if args.decimal:
        value = to_bigfloat(exact, args.decimal)
        data["decimal"] = str(value)
        text = f"{text} ≈ {_decimal_text(value)}"
    return data, text, EXIT_OK


def cmd_table(args) -> tuple[Any, str, int]:
    max_index = args.max_index or getattr(args, "vmax", None) or 15
    fmt = args.format
    text = emit_table(args.kind, max_index, fmt).rstrip("\n")
    if fmt == "json":
        return json.loads(text), text, EXIT_OK
    return None, text, EXIT_OK


def _closed_form(args):
    kind = "csc" if args.kind == "csc_only" else args.kind
    try:
        if kind == "csc":
            if args.ell == 1:
                return dowker(args.m, args.v) if args.v else Fraction(args.m - 1)
            if args.ell == 2:
                return cc_sum(args.m, 0, args.v, 2) if args.v else Fraction(args.m - 1)
        elif kind == "cc" and args.v + args.w:
            return cc_sum(args.m, args.v, args.w, args.ell)
        elif kind == "ts" and args.ell == 1 and args.v + args.w:
            return ts_sum(args.m, args.v, args.w)
    except UnsupportedSumError:
        return None
    return None


def cmd_oracle(args) -> tuple[Any, str, int]:
    kind = "csc" if args.kind == "csc_only" else args.kind
    digits = args.digits
    v, w = args.v, args.w
    if kind == "csc" and w:
        raise UsageError("--w applies to cc and ts only")
    numeric = raw_trig_sum(args.m, v, w, args.ell, kind, digits)
    data: dict[str, Any] = {"numeric": str(numeric)}
    lines = [f"numeric: {numeric}"]
    code = EXIT_OK
    exact = _closed_form(args)
    if exact is not None:
        verdict = check_exact_vs_numeric(exact, numeric, digits)
        data.update(exact=format_rational(exact), exact_decimal=str(verdict.exact),
                    rel_err=_sci(verdict.rel_err), status="pass" if verdict else "fail")
        lines += [f"exact:   {format_rational(exact)}", f"         {verdict.exact}",
                  f"rel_err: {data['rel_err']} ({data['status']})"]
        code = EXIT_OK if verdict else EXIT_FAIL
    return data, "\n".join(lines), code


def cmd_verify(args) -> tuple[Any, str, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    vmax = getattr(args, "vmax", None)
    digits = args.digits if args.digits_given else None
    reports = [run_suite(name, vmax, digits) for name in names]
    ok = all(r.ok for r in reports)
    data = {"ok": ok, "suites": [r.to_json() for r in reports]}
    return data, "\n".join(r.to_plain() for r in reports), EXIT_OK if ok else EXIT_FAIL


def cmd_partitions(args) -> tuple[Any, str, int]:
    k = args.k
    parts = [{"partition": str(p), "multiplicities": p.vector()} for p in enumerate_partitions(k)]
    count = partition_count(k)
    text = f"{format_partition_table(k)}\n{count} partitions of {k}"
    return {"k": k, "count": count, "partitions": parts}, text, EXIT_OK


COMMANDS = {
    "gcn": cmd_gcn,
    "sym": cmd_sym,
    "sum": cmd_sum,
    "table": cmd_table,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "partitions": cmd_partitions,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.digits_given = hasattr(args, "digits")
    if not hasattr(args, "format"):
        args.format = "plain"
    if not args.digits_given:
        args.digits = default_digits()
    if args.format == "csv" and args.command != "table":
        parser.error("--format csv is only available for table")
    try:
        data, text, code = COMMANDS[args.command](args)
    except (UsageError, UnsupportedSumError, PoleError, ValueError) as exc:
        print(f"trigsums: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        config = _config(args)
        config.pop("digits_given", None)
        print(json.dumps({"config": config, "result": data}, indent=1))
    else:
        print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
