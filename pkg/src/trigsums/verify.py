"""Verification suites: exact identities, golden tables, Norlund values,
large-m asymptotics and the numeric oracle."""

from __future__ import annotations

import time
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable

from .cosecant import (
    build_c_ladder,
    cosecant_number,
    gcn_by_interpolation,
    gcn_even_recurrence,
    gcn_partition_method,
    gcn_via_c_ladder,
    partition_contributions,
)
from .exact import PiScaled, bernoulli_poly, pochhammer_rising, zeta_even_ratio
from .oracle import check_exact_vs_numeric, pi_value, raw_trig_sum, to_bigfloat
from .poly import RationalPolynomial
from .report import VerificationReport
from .sums import (
    MSQ,
    cc_polynomial,
    cc_sum,
    dowker,
    dowker_q_coeffs,
    gardner_fisher,
    gf_identity_check,
    gf_p_coeffs,
    norlund_identity_check,
    ts_sum,
)
from .symfun import bridge_identity_check, sym_closed_form_checks, sym_direct, sym_table

__all__ = [
    "SUITES",
    "run_suite",
    "identities_suite",
    "tables_suite",
    "norlund_suite",
    "asymptotic_suite",
    "oracle_suite",
    "fisher_closed_forms",
    "ladder_checks",
    "even_recurrence_checks",
    "worked_polynomial_checks",
    "ts_reduction_checks",
    "asymptotic_ratio",
    "EQ29",
    "EQ32",
]

Z = zeta_even_ratio

_X = RationalPolynomial([0, 1], MSQ)

# reference cotangent-cosecant polynomials for (v, w, ell) = (5, 4, 2) and (6, 3, 1)
EQ29 = (
    RationalPolynomial([-1, 1], MSQ)
    * RationalPolynomial([-1, 4], MSQ)
    * RationalPolynomial(
        [2280413161, 712556555, -2906805048, -2535353600, 2920623488, 2565749760,
         -3310462976, 898396160],
        MSQ,
    )
    * Fraction(16, 194896477400625)
)
EQ32 = (
    RationalPolynomial([-1, 1], MSQ)
    * RationalPolynomial([-4, 1], MSQ)
    * RationalPolynomial(
        [-29787342748, 1960688815, 3595494399, -275848135, -335395979, 98107275,
         -10795297, 438670],
        MSQ,
    )
    * Fraction(1, 194896477400625)
)


def _guard(report: VerificationReport, id: str, anchor: str, fn: Callable[[], object]) -> None:
    # operations that self-check raise ArithmeticError on disagreement
    try:
        fn()
    except ArithmeticError as exc:
        report.add_bool(id, anchor, False, note=str(exc))
    else:
        report.add_bool(id, anchor, True)


def fisher_closed_forms(m_max: int = 20) -> VerificationReport:
    """S_{m,1} = pi^2/6 (1 - 1/m^2) and S_{m,2} = pi^4/90 (1 + 5/(2m^2) - 7/(2m^4))."""
    report = VerificationReport("fisher")
    for m in range(1, m_max + 1):
        m2 = Fraction(m * m)
        report.add(f"S_{m},1", "S_{m,1}", gardner_fisher(m, 1),
                   PiScaled(Fraction(1, 6) * (1 - 1 / m2), 2))
        report.add(f"S_{m},2", "S_{m,2}", gardner_fisher(m, 2),
                   PiScaled(Fraction(1, 90) * (1 + Fraction(5, 2) / m2 - Fraction(7, 2) / m2**2), 4))
    return report


def ladder_checks(n_lo: int = 4, n_hi: int = 10) -> VerificationReport:
    """C(n,1) = 4 B_3(n)/3, C(n,2) and C(n,3) against their closed forms (rising factorials)."""
    report = VerificationReport("c-ladder")
    ladder = build_c_ladder(n_hi)
    report.add("C(1,0)", "C(1,0) = 2", ladder(1, 0), 2)
    for n in range(2, n_hi + 1):
        report.add(f"C({n},1)", "C(n,1) = 4 sum l^2 = 4 B_3(n)/3", ladder(n, 1),
                   Fraction(4, 3) * bernoulli_poly(3, n))
    for n in range(n_lo, n_hi + 1):
        c2 = gcn_partition_method(2)(2 * n)
        c3 = gcn_partition_method(3)(2 * n)
        report.add(f"C({n},2) polynomial", "C(n,2) = n(n-1)(n-2)(2n-1)(2n-3)(5n+1)/135",
                   ladder(n, 2), Fraction(n * (n - 1) * (n - 2) * (2 * n - 1) * (2 * n - 3) * (5 * n + 1), 135))
        report.add(f"C({n},2) gcn", "C(n,2) = (2n-4)_4 c_{2n,2}/6", ladder(n, 2),
                   pochhammer_rising(2 * n - 4, 4) * c2 / 6)
        report.add(f"C({n},3) gcn", "C(n,3) = (2n-6)_6 c_{2n,3}/60", ladder(n, 3),
                   pochhammer_rising(2 * n - 6, 6) * c3 / 60)
    return report


def even_recurrence_checks(n_max: int = 6, k_max: int = 12) -> VerificationReport:
    """Partition method, interpolation, even-rho recurrence and the C-ladder sum agree."""
    report = VerificationReport("gcn-routes")
    rec = gcn_even_recurrence(n_max, k_max)
    for k in range(k_max + 1):
        part = gcn_partition_method(k)
        report.add(f"k={k} partition=interpolation", "c_{rho,k} two routes", part,
                   gcn_by_interpolation(k))
        report.add(f"k={k} cosecant number", "c_k = c_{1,k}", part(1), cosecant_number(k))
        for n in range(1, n_max + 1):
            report.add(f"c_({2 * n},{k}) recurrence", "even-rho recurrence", part(2 * n), rec[(n, k)])
            if k >= n:
                report.add(f"c_({2 * n},{k}) ladder", "C-ladder sum", part(2 * n), gcn_via_c_ladder(n, k))
        if k <= 10:
            for p, term in partition_contributions(k):
                sign = (-1) ** (k + p.num_parts)
                positive = all(c * sign >= 0 for c in term.coeffs) and not term.is_zero()
                report.add_bool(f"k={k} {p} sign", "sign (-1)^(k+N)", positive)
    return report


def worked_polynomial_checks() -> VerificationReport:
    report = VerificationReport("worked-polynomials")
    report.add("cc(5,4,ell=2)", "cot^10 csc^8 reference polynomial", cc_polynomial(5, 4, 2), EQ29)
    report.add("cc(6,3,ell=1)", "cot^12 csc^6 reference polynomial", cc_polynomial(6, 3, 1), EQ32)
    report.add("cc(0,1,ell=1)", "(m^2-1)/3", cc_polynomial(0, 1, 1), (_X - 1) * Fraction(1, 3))
    for m in range(1, 10):
        report.add(f"cc(5,4,2) m={m}", "polynomial vs sum", cc_sum(m, 5, 4, 2), EQ29(m * m))
        report.add(f"cc(6,3,1) m={m}", "polynomial vs sum", cc_sum(m, 6, 3, 1), EQ32(m * m))
    return report


def ts_reduction_checks(n_max: int = 8, vw_max: int = 9) -> VerificationReport:
    report = VerificationReport("ts-reduction")
    for n in range(1, n_max + 1):
        for v in range(vw_max + 1):
            for w in range(vw_max + 1 - v):
                if v + w == 0:
                    continue
                report.add(f"ts({2 * n},{v},{w})", "S^TS_{2n} = 2 S^CC_{n,ell=2}",
                           ts_sum(2 * n, v, w), 2 * cc_sum(n, v, w, 2))
    return report


def identities_suite(vmax: int = 12) -> VerificationReport:
    report = VerificationReport("identities")
    sym_v = min(vmax, 12)
    table = sym_table(max(sym_v, 1))
    for v in range(1, sym_v + 1):
        for n in range(v):
            report.add(f"s({v},{n}) recurrence=direct", "s recurrence", table(v, n), sym_direct(v, n))
    if vmax >= 4:
        report.extend(sym_closed_form_checks(vmax))
    report.extend(bridge_identity_check(vmax))
    report.extend(gf_identity_check(vmax))
    report.extend(even_recurrence_checks(min(vmax, 6), 12))
    report.extend(ladder_checks(4, 10))
    report.extend(fisher_closed_forms(20))
    for v in range(0, vmax + 1):
        _guard(report, f"p_{v} three routes", "p_v coefficients", lambda v=v: gf_p_coeffs(v))
    for v in range(1, vmax + 1):
        _guard(report, f"q_{v} closed forms", "q_v coefficients", lambda v=v: dowker_q_coeffs(v))
    report.extend(worked_polynomial_checks())
    report.extend(ts_reduction_checks())
    return report


def tables_suite(vmax: int = 15) -> VerificationReport:
    from .tables import compare_with_golden

    report = VerificationReport("tables")
    for kind in ("cosecant", "gf", "dowker"):
        report.extend(compare_with_golden(kind, vmax))
    return report


def norlund_suite(vmax: int = 8) -> VerificationReport:
    report = norlund_identity_check(vmax)
    report.suite = "norlund"
    return report


def asymptotic_ratio(m: int, v: int, digits: int = 60, *, pi_squared: bool = False) -> Decimal:
    """(S_{m,v} - zeta(2v)) * 12 m^2 / (v zeta(2v-2)), from exact values.

    The m^-2 coefficient of S_{m,v} is v pi^2 zeta(2v-2)/12, so this tends to
    pi^2. With ``pi_squared`` the denominator carries that pi^2 and the ratio
    tends to 1.
    """
    if v < 2:
        raise ValueError("v must be >= 2")
    diff = gardner_fisher(m, v).coeff - Z(v)
    ratio = PiScaled(diff * 12 * m * m / (v * Z(v - 1)), 0 if pi_squared else 2)
    return to_bigfloat(ratio, digits)


def asymptotic_suite(m: int = 200, vs: tuple[int, ...] = (2, 3, 4), digits: int = 60) -> VerificationReport:
    report = VerificationReport("asymptotic")
    lo, hi = Decimal("0.99"), Decimal("1.01")
    for v in vs:
        r = asymptotic_ratio(m, v, digits)
        report.add_bool(f"m={m} v={v}", "S_{m,v} ~ zeta(2v) + v zeta(2v-2)/(12 m^2)",
                        lo <= r <= hi, f"{r:.12f}", "[0.99, 1.01]",
                        note="the m^-2 term lacks a factor pi^2; the ratio tends to pi^2")
        r = asymptotic_ratio(m, v, digits, pi_squared=True)
        report.add_bool(f"m={m} v={v} with pi^2", "S_{m,v} ~ zeta(2v) + v pi^2 zeta(2v-2)/(12 m^2)",
                        lo <= r <= hi, f"{r:.12f}", "[0.99, 1.01]")
    return report


def oracle_suite(digits: int = 60, ms: tuple[int, ...] = (2, 3, 5, 8, 13), v_max: int = 8) -> VerificationReport:
    """Closed forms vs. direct high-precision summation (relative 10^-(digits-10))."""
    report = VerificationReport("oracle")

    def record(label: str, exact, numeric: Decimal, elapsed: float) -> None:
        verdict = check_exact_vs_numeric(exact, numeric, digits)
        with localcontext() as ctx:
            ctx.prec = 8
            rel = +verdict.rel_err
        report.add_bool(label, "exact vs numeric", verdict.passed, verdict.exact, verdict.numeric,
                        elapsed=elapsed, note=f"rel_err={rel}")

    for m in ms:
        for v in range(1, v_max + 1):
            for ell in (1, 2):
                start = time.perf_counter()
                numeric = raw_trig_sum(m, v, 0, ell, "csc", digits)
                if ell == 1:
                    exact = dowker(m, v)
                else:
                    exact = PiScaled(gardner_fisher(m, v).coeff * (2 * m) ** (2 * v), 0)
                record(f"csc m={m} v={v} ell={ell}", exact, numeric, time.perf_counter() - start)
            if m > 1:
                start = time.perf_counter()
                # the normalized sum itself, in its cosine form
                numeric = raw_trig_sum(m, 0, v, 2, "ts", digits)
                with localcontext() as ctx:
                    ctx.prec = digits + 12
                    numeric = numeric * (pi_value(digits + 12) / (2 * m)) ** (2 * v)
                record(f"S_(m={m},v={v}) cosine form", gardner_fisher(m, v), numeric,
                       time.perf_counter() - start)
    for m in (5, 7):
        for v, w in ((1, 1), (2, 1), (5, 4), (6, 3)):
            for ell in (1, 2):
                start = time.perf_counter()
                numeric = raw_trig_sum(m, v, w, ell, "cc", digits)
                record(f"cc m={m} v={v} w={w} ell={ell}", cc_sum(m, v, w, ell), numeric,
                       time.perf_counter() - start)
    for m in (4, 6, 14):
        for v, w in ((0, 1), (1, 1), (5, 4)):
            start = time.perf_counter()
            numeric = raw_trig_sum(m, v, w, 1, "ts", digits)
            record(f"ts m={m} v={v} w={w}", ts_sum(m, v, w), numeric, time.perf_counter() - start)
    return report


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "identities": identities_suite,
    "tables": tables_suite,
    "norlund": norlund_suite,
    "asymptotic": asymptotic_suite,
    "oracle": oracle_suite,
}


def run_suite(name: str, vmax: int | None = None, digits: int | None = None) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if name == "identities":
        return identities_suite(vmax or 12)
    if name == "tables":
        return tables_suite(vmax or 15)
    if name == "norlund":
        return norlund_suite(vmax or 8)
    if name == "asymptotic":
        return asymptotic_suite(digits=digits or 60)
    return oracle_suite(digits=digits or 60, v_max=vmax or 8)
