"""Truncated power series over the rationals.

Used as an independent route to the generalized cosecant numbers (the
coefficients of (x/sin x)**rho) and to Norlund polynomials through their
generating function (t/(e^t - 1))**m * e^(x t).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .exact import factorial, format_rational

__all__ = [
    "TruncatedSeries",
    "series_mul",
    "series_reciprocal",
    "series_int_pow",
    "xcsc_series",
    "gcn_by_series",
    "norlund_poly_value",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 40


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``a_0 .. a_order`` of a power series truncated at ``order``."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Union[int, Fraction]]) -> None:
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def identity(cls, order: int) -> TruncatedSeries:
        return cls([1] + [0] * order)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coefficients[: order + 1])

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def to_json(self) -> str:
        return json.dumps([format_rational(c) for c in self.coefficients])


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller of the two orders."""
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(n + 1):
        acc = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                acc += ac[i] * bc[k - i]
        out.append(acc)
    return TruncatedSeries(out)


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a.coefficients[0]
    if a0 == 0:
        raise ZeroDivisionError("series reciprocal needs a nonzero constant term")
    ac = a.coefficients
    inv0 = 1 / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            if ac[i]:
                acc += ac[i] * out[n - i]
        out.append(-acc * inv0)
    return TruncatedSeries(out)


def series_int_pow(a: TruncatedSeries, p: int) -> TruncatedSeries:
    if p < 0:
        raise ValueError("p must be >= 0")
    result = TruncatedSeries.identity(a.order)
    base = a
    while p:
        if p & 1:
            result = series_mul(result, base)
        p >>= 1
        if p:
            base = series_mul(base, base)
    return result


@lru_cache(maxsize=None)
def xcsc_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """x/sin x as a series in y = x**2, through y**order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    sinc = TruncatedSeries(
        Fraction((-1) ** k, factorial(2 * k + 1)) for k in range(order + 1)
    )
    return series_reciprocal(sinc)


@lru_cache(maxsize=None)
def _xcsc_power(rho: int, order: int) -> TruncatedSeries:
    return series_int_pow(xcsc_series(order), rho)


def gcn_by_series(rho: int, k: int) -> Fraction:
    """Coefficient of x**(2k) in (x/sin x)**rho for a nonnegative integer rho."""
    if rho < 0:
        raise ValueError("rho must be a nonnegative integer")
    if k < 0:
        raise ValueError("k must be >= 0")
    if rho == 0:
        return Fraction(1 if k == 0 else 0)
    order = max(DEFAULT_ORDER, k)
    return _xcsc_power(rho, order)[k]


@lru_cache(maxsize=None)
def _bernoulli_gf(order: int) -> TruncatedSeries:
    # t/(e^t - 1) = 1 / sum_i t^i/(i+1)!
    return series_reciprocal(
        TruncatedSeries(Fraction(1, factorial(i + 1)) for i in range(order + 1))
    )


def norlund_poly_value(order_m: int, degree_k: int, x: Union[int, Fraction]) -> Fraction:
    """Norlund polynomial B^(m)_k(x) = k! [t^k] (t/(e^t-1))^m e^(x t)."""
    if order_m < 1:
        raise ValueError("order_m must be >= 1")
    if degree_k < 0:
        raise ValueError("degree_k must be >= 0")
    x = Fraction(x)
    gf = series_int_pow(_bernoulli_gf(degree_k), order_m)
    exp_xt = TruncatedSeries(x**i / factorial(i) for i in range(degree_k + 1))
    return series_mul(gf, exp_xt)[degree_k] * factorial(degree_k)
