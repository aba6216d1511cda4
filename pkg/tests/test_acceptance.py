"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run with ``pytest -v tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import io
import sys
import time
from decimal import Decimal
from fractions import Fraction

import pytest

from trigsums.cli import main as cli_main
from trigsums.oracle import check_exact_vs_numeric, raw_trig_sum
from trigsums.report import FAIL, PASS, VerificationReport
from trigsums.series import norlund_poly_value
from trigsums.sums import (
    UnsupportedSumError,
    cc_polynomial,
    cc_sum,
    dowker,
    gardner_fisher,
    gf_identity_check,
    norlund_identity_check,
    ts_sum,
)
from trigsums.symfun import bridge_identity_check, sym_direct, sym_table
from trigsums.tables import compare_with_golden, format_row, load_golden
from trigsums.verify import (
    EQ29,
    EQ32,
    asymptotic_ratio,
    even_recurrence_checks,
    fisher_closed_forms,
    ladder_checks,
)

_CAPSYS = None


def _line(number: int, ok: bool, text: str) -> None:
    msg = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}"
    if _CAPSYS is not None:
        with _CAPSYS.disabled():
            print(f"\n{msg}")
    else:
        print(msg)


@pytest.fixture(autouse=True)
def _show_lines(capsys):
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def _sci(x: Decimal) -> str:
    return "0" if x == 0 else f"{x:.1E}"


def _cli(*argv: str) -> tuple[int, str, float]:
    buf = io.StringIO()
    start = time.perf_counter()
    with contextlib.redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, buf.getvalue(), time.perf_counter() - start


def _table_lines(out: str) -> dict[int, str]:
    rows = {}
    for line in out.splitlines()[1:]:
        idx, _, display = line.partition(" | ")
        rows[int(idx)] = display
    return rows


def _table_criterion(kind: str, max_index: int, limit: float) -> tuple[bool, str]:
    code, out, elapsed = _cli("table", kind, "--max", str(max_index))
    shown = _table_lines(out)
    golden = {r.index: r for r in load_golden(kind) if r.index <= max_index}
    bad_display = [i for i, gold in golden.items() if shown.get(i) != format_row(gold)]
    report = compare_with_golden(kind, max_index)
    bad_exact = [c.id for c in report.checks if c.status == FAIL]
    ok = code == 0 and not bad_display and not bad_exact and elapsed < limit
    detail = f"{len(golden) - len(bad_display)}/{len(golden)} rows match, {elapsed:.2f}s"
    if bad_display:
        detail += f"; mismatched rows {bad_display}"
    return ok, detail


def test_criterion_1_cosecant_table():
    ok, detail = _table_criterion("cosecant", 12, 60.0)
    report = compare_with_golden("cosecant", 15)
    status = {c.id: c for c in report.checks}
    three_way = all(status[f"cosecant row {k} three-way"].status == PASS for k in (13, 14, 15))
    late_never_fail = all(status[f"cosecant row {k}"].status != FAIL for k in (13, 14, 15))
    ok = ok and three_way and late_never_fail
    _line(1, ok, f"cosecant table rows 0..12: {detail}; rows 13..15 three-way agreement: {three_way}")
    assert ok, detail


def test_criterion_2_gf_table():
    ok, detail = _table_criterion("gf", 15, 10.0)
    _line(2, ok, f"gf table rows 1..15: {detail}")
    assert ok, detail


def test_criterion_3_dowker_table():
    ok, detail = _table_criterion("dowker", 15, 10.0)
    _line(3, ok, f"dowker table rows 1..15: {detail}")
    assert ok, detail


def test_criterion_4_fisher_closed_forms():
    report = fisher_closed_forms(20)
    ok = report.ok and len(report.checks) == 40
    _line(4, ok, f"S_(m,1) and S_(m,2) closed forms for m <= 20: {report.counts()[PASS]}/40")
    assert ok


def test_criterion_5_identity_suites():
    report = VerificationReport("criterion-5")
    report.extend(bridge_identity_check(12))
    gf = gf_identity_check(12)
    report.extend(gf)
    weighted = [c for c in gf.checks if c.id.startswith("weighted-sum")]
    report.add_bool("weighted sums cover v <= 10", "2^v", len(weighted) >= 10)
    table = sym_table(12)
    for v in range(1, 13):
        for n in range(v):
            report.add(f"s({v},{n})", "recurrence vs enumeration", table(v, n), sym_direct(v, n))
    report.extend(even_recurrence_checks(6, 12))
    report.extend(ladder_checks(4, 10))
    report.extend(norlund_identity_check(8))
    report.add("B^(4)_2(2)", "generating function", norlund_poly_value(4, 2, 2), Fraction(-1, 3))
    ok = report.ok
    n = report.counts()
    _line(5, ok, f"exact identity suites: {n[PASS]} checks passed, {n[FAIL]} failed")
    assert ok, [c.id for c in report.failures]


def test_criterion_6_worked_polynomials():
    exact_ok = cc_polynomial(5, 4, 2) == EQ29 and cc_polynomial(6, 3, 1) == EQ32
    v29 = check_exact_vs_numeric(EQ29(49), raw_trig_sum(7, 5, 4, 2, "cc", 60), 60)
    v32 = check_exact_vs_numeric(EQ32(49), raw_trig_sum(7, 6, 3, 1, "cc", 60), 60)
    tight = all(v.rel_err < Decimal(10) ** -40 for v in (v29, v32))
    ok = exact_ok and bool(v29) and bool(v32) and tight
    _line(6, ok, f"cot/csc worked polynomials exact: {exact_ok}; m=7 numeric rel errors "
                 f"{_sci(v29.rel_err)}, {_sci(v32.rel_err)}")
    assert ok


def test_criterion_7_oracle_cross_validation():
    start = time.perf_counter()
    worst = Decimal(0)
    failures = []
    for m in (2, 3, 5, 8, 13):
        for v in range(1, 9):
            for ell in (1, 2):
                numeric = raw_trig_sum(m, v, 0, ell, "csc", 60)
                exact = dowker(m, v) if ell == 1 else gardner_fisher(m, v).coeff * (2 * m) ** (2 * v)
                verdict = check_exact_vs_numeric(exact, numeric, 60)
                worst = max(worst, verdict.rel_err)
                if verdict.rel_err >= Decimal(10) ** -40:
                    failures.append((m, v, ell))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    _line(7, ok, f"80 csc sums vs direct summation at 60 digits: worst rel err {_sci(worst)}, {elapsed:.2f}s")
    assert ok, failures


def test_criterion_8_asymptotic():
    ratios = {v: asymptotic_ratio(200, v, 60) for v in (2, 3, 4)}
    ok = all(Decimal("0.99") <= r <= Decimal("1.01") for r in ratios.values())
    shown = ", ".join(f"v={v}: {r:.6f}" for v, r in ratios.items())
    _line(8, ok, f"(S - zeta(2v)) 12 m^2/(v zeta(2v-2)) at m=200 in [0.99, 1.01]: {shown}")
    assert ok, shown


def test_criterion_9_ts_reduction():
    mismatches = []
    count = 0
    for n in range(1, 9):
        for v in range(10):
            for w in range(10 - v):
                if v + w == 0:
                    continue
                count += 1
                if ts_sum(2 * n, v, w) != 2 * cc_sum(n, v, w, 2):
                    mismatches.append((n, v, w))
    rejected = 0
    for m in (1, 3, 5, 7, 9):
        try:
            ts_sum(m, 1, 1)
        except UnsupportedSumError:
            rejected += 1
    ok = not mismatches and rejected == 5
    _line(9, ok, f"ts(2n) = 2 cc(n, ell=2) for {count - len(mismatches)}/{count} cases; "
                 f"odd m rejected {rejected}/5")
    assert ok, mismatches


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
