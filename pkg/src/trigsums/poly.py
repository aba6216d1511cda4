"""Dense univariate polynomials over the rationals in one named variable."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exact import format_rational, parse_rational

__all__ = ["RationalPolynomial", "content_split"]

Scalar = Union[int, Fraction]


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def content_split(coeffs: Iterable[Scalar]) -> tuple[Fraction, list[int]]:
    """Factor rationals as ``content * integers`` with coprime integers.

    The content is gcd(numerators)/lcm(denominators), signed so that the last
    nonzero integer is positive. All-zero input gives content 0.
    """
    fracs = [Fraction(c) for c in coeffs]
    nonzero = [c for c in fracs if c]
    if not nonzero:
        return Fraction(0), [0] * len(fracs)
    num_gcd = 0
    den_lcm = 1
    for c in nonzero:
        num_gcd = math.gcd(num_gcd, c.numerator)
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    content = Fraction(num_gcd, den_lcm)
    if nonzero[-1] < 0:
        content = -content
    ints = []
    for c in fracs:
        q = c / content
        assert q.denominator == 1
        ints.append(q.numerator)
    return content, ints


@dataclass(frozen=True)
class RationalPolynomial:
    """``sum coeffs[i] * var**i``; trailing zeros are stripped on construction."""

    coeffs: tuple[Fraction, ...]
    var: str = "x"

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "x") -> None:
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in coeffs))
        object.__setattr__(self, "var", var)

    @classmethod
    def constant(cls, c: Scalar, var: str = "x") -> RationalPolynomial:
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1, var: str = "x") -> RationalPolynomial:
        return cls([0] * degree + [c], var)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> RationalPolynomial:
        if isinstance(other, RationalPolynomial):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([other], self.var)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other) -> RationalPolynomial:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(
            (self.coeff(i) + other.coeff(i) for i in range(n)), self.var
        )

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial((-c for c in self.coeffs), self.var)

    def __sub__(self, other) -> RationalPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RationalPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> RationalPolynomial:
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial((c * other for c in self.coeffs), self.var)
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, p: int) -> RationalPolynomial:
        if p < 0:
            raise ValueError("negative power")
        out = RationalPolynomial([1], self.var)
        base = self
        while p:
            if p & 1:
                out = out * base
            base = base * base
            p >>= 1
        return out

    def __divmod__(self, divisor: RationalPolynomial) -> tuple[RationalPolynomial, RationalPolynomial]:
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlead = divisor.coeffs[-1]
        dd = divisor.degree
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] / dlead
            quot[i - dd] = q
            if q:
                for j, c in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= q * c
        return RationalPolynomial(quot, self.var), RationalPolynomial(rem[:dd], self.var)

    def exact_div(self, divisor: RationalPolynomial) -> RationalPolynomial:
        """Quotient, raising ``ArithmeticError`` if the remainder is nonzero."""
        q, r = divmod(self, divisor)
        if not r.is_zero():
            raise ArithmeticError(f"nonzero remainder {r.coeffs} dividing by {divisor.coeffs}")
        return q

    def content(self) -> tuple[Fraction, list[int]]:
        return content_split(self.coeffs)

    def with_var(self, var: str) -> RationalPolynomial:
        return RationalPolynomial(self.coeffs, var)

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Union[dict, str]) -> RationalPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls((parse_rational(c) for c in data["coeffs"]), data.get("var", "x"))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({format_rational(c)})*{mono}")
            else:
                terms.append(format_rational(c))
        return " + ".join(terms)
