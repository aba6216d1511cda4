"""High-precision numeric evaluation of the raw trigonometric sums.

Numbers are :class:`decimal.Decimal` values computed in a local context with
guard digits. pi comes from a Machin-type arctangent formula; sine and cosine
are Taylor series evaluated only on [0, pi/4] after the angle k/(ell m) * pi
has been reduced exactly as a rational multiple of pi.
"""

from __future__ import annotations

import os
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .exact import PiScaled

__all__ = [
    "BigFloat",
    "DEFAULT_DIGITS",
    "GUARD_DIGITS",
    "PoleError",
    "default_digits",
    "pi_value",
    "pi_value_alt",
    "sin_cos_pi_fraction",
    "raw_trig_sum",
    "to_bigfloat",
    "check_exact_vs_numeric",
    "Verdict",
]

BigFloat = Decimal
DEFAULT_DIGITS = 60
GUARD_DIGITS = 12


class PoleError(ZeroDivisionError):
    """A summand has a vanishing trigonometric denominator."""

    def __init__(self, k: int, message: str) -> None:
        super().__init__(message)
        self.k = k


def default_digits() -> int:
    env = os.environ.get("TRIGSUM_DIGITS")
    return int(env) if env else DEFAULT_DIGITS


def _arctan_inv(x: int, prec: int) -> Decimal:
    """arctan(1/x) by its Taylor series, at ``prec`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = prec
        x2 = x * x
        term = Decimal(1) / x
        total = term
        n = 1
        eps = Decimal(10) ** (-prec - 2)
        while True:
            term /= -x2
            delta = term / (2 * n + 1)
            if abs(delta) < eps:
                break
            total += delta
            n += 1
        return total


@lru_cache(maxsize=64)
def pi_value(digits: int) -> Decimal:
    """pi rounded to ``digits`` significant digits (Machin: 16 atan(1/5) - 4 atan(1/239))."""
    if digits < 1:
        raise ValueError("digits must be positive")
    prec = digits + GUARD_DIGITS
    with localcontext() as ctx:
        ctx.prec = prec
        val = 16 * _arctan_inv(5, prec) - 4 * _arctan_inv(239, prec)
        ctx.prec = digits
        return +val


@lru_cache(maxsize=64)
def pi_value_alt(digits: int) -> Decimal:
    """pi from Gauss's formula 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239)."""
    prec = digits + GUARD_DIGITS
    with localcontext() as ctx:
        ctx.prec = prec
        val = 48 * _arctan_inv(18, prec) + 32 * _arctan_inv(57, prec) - 20 * _arctan_inv(239, prec)
        ctx.prec = digits
        return +val


def _sin_cos_taylor(x: Decimal, prec: int) -> tuple[Decimal, Decimal]:
    with localcontext() as ctx:
        ctx.prec = prec
        eps = Decimal(10) ** (-prec - 2)
        x2 = x * x
        s_term, c_term = x, Decimal(1)
        s_sum, c_sum = s_term, c_term
        n = 1
        while abs(s_term) > eps or abs(c_term) > eps:
            c_term = -c_term * x2 / ((2 * n - 1) * (2 * n))
            s_term = -s_term * x2 / ((2 * n) * (2 * n + 1))
            c_sum += c_term
            s_sum += s_term
            n += 1
        return s_sum, c_sum


def sin_cos_pi_fraction(r: Fraction, digits: int) -> tuple[Decimal, Decimal]:
    """|sin(r pi)| and |cos(r pi)| for rational r.

    Only absolute values are returned; every sum here uses even powers.
    """
    prec = digits + GUARD_DIGITS
    r = Fraction(r) % 1
    if r > Fraction(1, 2):
        r = 1 - r
    # r in [0, 1/2]; swap around pi/4 to keep the Taylor argument small
    swap = r > Fraction(1, 4)
    if swap:
        r = Fraction(1, 2) - r
    if r == 0:
        s, c = Decimal(0), Decimal(1)
    else:
        with localcontext() as ctx:
            ctx.prec = prec
            x = pi_value(prec) * r.numerator / r.denominator
        s, c = _sin_cos_taylor(x, prec)
    return (c, s) if swap else (s, c)


def raw_trig_sum(m: int, v: int, w: int = 0, ell: int = 1, kind: str = "csc",
                 digits: int | None = None) -> Decimal:
    """Direct summation over k = 1..m-1 with angle k pi/(ell m).

    kind ``csc``: csc^(2v); ``cc``: cot^(2v) csc^(2w); ``ts``: tan^(2v) sec^(2w).
    For ``ts`` with ell = 1 and even m the pole at k = m/2 is skipped.
    """
    if digits is None:
        digits = default_digits()
    if m < 1 or ell < 1:
        raise ValueError("m and ell must be positive")
    if v < 0 or w < 0:
        raise ValueError("powers must be nonnegative")
    if kind not in ("csc", "cc", "ts"):
        raise ValueError(f"unknown kind {kind!r}")
    prec = digits + GUARD_DIGITS
    terms = []
    for k in range(1, m):
        if kind == "ts" and ell == 1 and 2 * k == m:
            continue
        s, c = sin_cos_pi_fraction(Fraction(k, ell * m), digits)
        with localcontext() as ctx:
            ctx.prec = prec
            if kind == "csc":
                num, den, power_den = Decimal(1), s, 2 * v
                power_num = 0
            elif kind == "cc":
                num, den, power_num, power_den = c, s, 2 * v, 2 * v + 2 * w
            else:
                num, den, power_num, power_den = s, c, 2 * v, 2 * v + 2 * w
            if den == 0 and power_den > 0:
                raise PoleError(k, f"vanishing denominator at k={k} (m={m}, ell={ell}, kind={kind})")
            # Decimal refuses 0**0; a zero exponent means a factor of 1
            top = num**power_num if power_num else Decimal(1)
            terms.append(top / den**power_den)
    with localcontext() as ctx:
        ctx.prec = prec
        total = Decimal(0)
        for t in terms:
            total += t
        ctx.prec = digits
        return +total


def to_bigfloat(exact: Union[PiScaled, Fraction, int], digits: int) -> Decimal:
    prec = digits + GUARD_DIGITS
    if isinstance(exact, PiScaled):
        coeff, pi_pow = exact.coeff, exact.pi_pow
    else:
        coeff, pi_pow = Fraction(exact), 0
    with localcontext() as ctx:
        ctx.prec = prec
        val = Decimal(coeff.numerator) / Decimal(coeff.denominator)
        if pi_pow:
            val *= pi_value(prec) ** pi_pow
        ctx.prec = digits
        return +val


class Verdict:
    """Outcome of an exact-vs-numeric comparison."""

    def __init__(self, passed: bool, exact: Decimal, numeric: Decimal, rel_err: Decimal,
                 digits: int) -> None:
        self.passed = passed
        self.exact = exact
        self.numeric = numeric
        self.rel_err = rel_err
        self.digits = digits

    def __bool__(self) -> bool:
        return self.passed

    def __repr__(self) -> str:
        status = "pass" if self.passed else "fail"
        return f"Verdict({status}, exact={self.exact}, numeric={self.numeric}, rel_err={self.rel_err:.3E})"


def check_exact_vs_numeric(exact: Union[PiScaled, Fraction, int], numeric: Decimal,
                           digits: int | None = None) -> Verdict:
    """Pass iff the relative difference is below 10^-(digits-10).

    A zero exact value is compared by absolute difference instead.
    """
    if digits is None:
        digits = default_digits()
    exact_val = to_bigfloat(exact, digits)
    with localcontext() as ctx:
        ctx.prec = digits + GUARD_DIGITS
        diff = abs(exact_val - numeric)
        rel = diff / abs(exact_val) if exact_val != 0 else diff
        tol = Decimal(10) ** (-(digits - 10))
        return Verdict(rel < tol, exact_val, numeric, rel, digits)
