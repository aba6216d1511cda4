"""Tabulation of c_{rho,k}, R_v and T_v, and comparison with the shipped golden files.

Golden files (``data/table_*.json``) hold the reference rows, transcribed as
prefactor times integer polynomial; they are never produced by this package.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .cosecant import gcn_by_interpolation, gcn_even_recurrence, gcn_partition_method
from .exact import factorial, format_rational, zeta_even_ratio
from .poly import RationalPolynomial
from .report import VerificationReport
from .sums import MSQ, dowker_table_polynomial, gf_table_polynomial

__all__ = [
    "KINDS",
    "TableRow",
    "load_golden",
    "computed_row",
    "table_rows",
    "compare_with_golden",
    "emit_table",
    "format_row",
]

KINDS = ("cosecant", "gf", "dowker")


@dataclass(frozen=True)
class TableRow:
    """One table row: ``value = scale * poly`` where ``poly`` is the displayed part.

    For ``cosecant`` the scale is 1 and ``poly`` is c_{rho,k}. For ``gf`` and
    ``dowker`` the scale is zeta(2v) (resp. zeta(2v)/pi^(2v)) and ``poly`` is the
    row divided by Z(v).
    """

    kind: str
    index: int
    poly: RationalPolynomial
    report_only: bool = False

    @property
    def value(self) -> RationalPolynomial:
        """The pi-normalized row (c_{rho,k}, R_v or T_v)."""
        if self.kind == "cosecant":
            return self.poly
        return self.poly * zeta_even_ratio(self.index)


def load_golden(kind: str) -> list[TableRow]:
    if kind not in KINDS:
        raise ValueError(f"unknown table {kind!r}")
    text = resources.files("trigsums").joinpath(f"data/table_{kind}.json").read_text()
    data = json.loads(text)
    rows = []
    for row in data["rows"]:
        if kind == "cosecant":
            pref = Fraction(row["num"], row["den_mult"] * factorial(row["den_factorial"]))
            poly = RationalPolynomial(row["coeffs"], "rho") * pref
            rows.append(TableRow(kind, row["k"], poly, row.get("report_only", False)))
        elif kind == "gf":
            poly = RationalPolynomial(row["coeffs"], MSQ) * Fraction(row["prefactor"])
            rows.append(TableRow(kind, row["v"], poly))
        else:
            poly = RationalPolynomial([1], MSQ)
            for factor in row["factors"]:
                poly = poly * RationalPolynomial(factor, MSQ)
            rows.append(TableRow(kind, row["v"], poly * Fraction(row["prefactor"])))
    return rows


def computed_row(kind: str, index: int) -> TableRow:
    if kind == "cosecant":
        return TableRow(kind, index, gcn_partition_method(index))
    if kind == "gf":
        return TableRow(kind, index, gf_table_polynomial(index).divided_by_zeta().poly)
    if kind == "dowker":
        return TableRow(kind, index, dowker_table_polynomial(index).divided_by_zeta().poly)
    raise ValueError(f"unknown table {kind!r}")


def table_rows(kind: str, max_index: int) -> list[TableRow]:
    start = 0 if kind == "cosecant" else 1
    return [computed_row(kind, i) for i in range(start, max_index + 1)]


def _three_way(k: int, n_max: int = 6) -> tuple[bool, str]:
    part = gcn_partition_method(k)
    interp = gcn_by_interpolation(k)
    if part != interp:
        return False, "partition != interpolation"
    rec = gcn_even_recurrence(n_max, k)
    for n in range(1, n_max + 1):
        if part(2 * n) != rec[(n, k)]:
            return False, f"partition != recurrence at rho={2 * n}"
    return True, ""


def compare_with_golden(kind: str, max_index: int = 15) -> VerificationReport:
    """Exact comparison of computed rows with the golden file, row by row.

    Rows flagged report-only (cosecant k >= 13) never fail; for them the
    internal three-way agreement is checked instead.
    """
    report = VerificationReport(f"table-{kind}")
    for gold in load_golden(kind):
        if gold.index > max_index:
            continue
        start = time.perf_counter()
        row = computed_row(kind, gold.index)
        elapsed = time.perf_counter() - start
        report.add_bool(
            f"{kind} row {gold.index}", f"{kind} table", row.poly == gold.poly,
            _display_plain(row), _display_plain(gold), elapsed=elapsed,
            report_only=gold.report_only,
        )
        if kind == "cosecant" and gold.report_only:
            ok, why = _three_way(gold.index)
            report.add_bool(f"cosecant row {gold.index} three-way",
                            "partition = interpolation = recurrence", ok, note=why)
    return report


# ---------------------------------------------------------------------------
# display
# ---------------------------------------------------------------------------

_SUPERSCRIPT_VAR = {"rho": ("rho", "\\rho"), MSQ: ("m", "m")}


def _monomial(var: str, power: int, latex: bool) -> str:
    name = _SUPERSCRIPT_VAR.get(var, (var, var))[1 if latex else 0]
    if var == MSQ:
        power *= 2
    if power == 0:
        return ""
    if power == 1:
        return name
    return f"{name}^{{{power}}}" if latex else f"{name}^{power}"


def _int_poly(ints: list[int], var: str, latex: bool, descending: bool) -> str:
    order = range(len(ints) - 1, -1, -1) if descending else range(len(ints))
    parts: list[str] = []
    for i in order:
        c = ints[i]
        if not c:
            continue
        mono = _monomial(var, i, latex)
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag}{mono}" if latex else (f"{mag} {mono}" if mono else str(mag)))
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _prefactor(content: Fraction, latex: bool) -> str:
    if content == 1:
        return ""
    if content.denominator == 1:
        return str(content.numerator)
    if latex:
        return f"\\frac{{{content.numerator}}}{{{content.denominator}}}"
    return f"({format_rational(content)})"


def _display(row: TableRow, latex: bool) -> str:
    content, ints = row.poly.content()
    descending = row.kind == "dowker"
    body = _int_poly(ints, row.poly.var, latex, descending)
    pref = _prefactor(content, latex)
    if row.kind == "cosecant":
        if len(ints) == 1:
            return format_rational(content)
        return f"{pref}\\,({body})" if latex and pref else (f"{pref}({body})" if pref else f"({body})")
    s = 2 * row.index
    tail = "" if ints == [1] else f"({body})"
    if latex:
        zeta = f"\\zeta({s})" if row.kind == "gf" else f"\\frac{{\\zeta({s})}}{{\\pi^{{{s}}}}}"
        tail = f"\\,{tail}" if tail else ""
        return f"{pref}\\,{zeta}{tail}" if pref else f"{zeta}{tail}"
    zeta = f"zeta({s})" if row.kind == "gf" else f"zeta({s})/pi^{s}"
    if row.kind == "dowker":
        zeta = f"({zeta})"
    return f"{pref}{zeta}{tail}"


def _display_plain(row: TableRow) -> str:
    return _display(row, latex=False)


def format_row(row: TableRow, latex: bool = False) -> str:
    """A row as prefactor times primitive integer polynomial."""
    return _display(row, latex)


_HEADERS = {
    "cosecant": ("k", "c_{rho,k}"),
    "gf": ("v", "(2m^2)^v S_{m,v}/(m^2-1)"),
    "dowker": ("v", "S_{m,v,1}/(m^2-1)"),
}


def emit_table(kind: str, max_index: int, fmt: str = "plain") -> str:
    """Render a table in ``plain``, ``latex``, ``json`` or ``csv`` form.

    Each row is shown as a rational prefactor times a primitive integer
    polynomial (content = gcd of numerators over lcm of denominators).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown table {kind!r}")
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    rows = table_rows(kind, max_index)
    idx_name, header = _HEADERS[kind]
    if fmt == "plain":
        width = len(str(max_index))
        lines = [f"{idx_name.rjust(width)} | {header}"]
        lines += [f"{str(r.index).rjust(width)} | {_display(r, False)}" for r in rows]
        return "\n".join(lines)
    if fmt == "latex":
        lines = ["\\begin{tabular}{|c|l|} \\hline", f"${idx_name}$ & ${header}$ \\\\ \\hline"]
        lines += [f"${r.index}$ & ${_display(r, True)}$ \\\\" for r in rows]
        lines.append("\\hline\n\\end{tabular}")
        return "\n".join(lines)
    if fmt == "json":
        out = []
        for r in rows:
            content, ints = r.poly.content()
            entry = {idx_name: r.index, "display": _display(r, False), "var": r.poly.var,
                     "coeffs": [format_rational(c) for c in r.value.coeffs],
                     "prefactor": format_rational(content), "integer_coeffs": [str(i) for i in ints]}
            if kind != "cosecant":
                entry["zeta_scale"] = f"zeta({2 * r.index})" + ("" if kind == "gf" else f"/pi^{2 * r.index}")
            out.append(entry)
        return json.dumps({"table": kind, "rows": out}, indent=1)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        degree = max(len(r.poly.coeffs) for r in rows)
        writer.writerow([idx_name, "prefactor"] + [f"c{i}" for i in range(degree)])
        for r in rows:
            content, ints = r.poly.content()
            writer.writerow([r.index, format_rational(content)] + [str(i) for i in ints])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")
