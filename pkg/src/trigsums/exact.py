"""Exact rational scalars, pi-scaled values and classical number-theoretic constants.

Rationals are plain :class:`fractions.Fraction` objects, which are always kept
in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "PiScaled",
    "factorial",
    "binomial",
    "pochhammer_rising",
    "gamma_ratio",
    "half_gamma_ratio",
    "bernoulli_number",
    "zeta_even_ratio",
    "zeta_even",
    "bernoulli_poly",
    "format_rational",
    "parse_rational",
]

Rational = Fraction
RationalLike = Union[int, Fraction]


def format_rational(x: RationalLike) -> str:
    """Canonical ``"p/q"`` string, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class PiScaled:
    """The exact quantity ``coeff * pi**pi_pow``."""

    coeff: Fraction
    pi_pow: int = 0

    def __post_init__(self) -> None:
        coeff = Fraction(self.coeff)
        object.__setattr__(self, "coeff", coeff)
        if coeff == 0:
            object.__setattr__(self, "pi_pow", 0)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __add__(self, other: PiScaled) -> PiScaled:
        if not isinstance(other, PiScaled):
            return NotImplemented
        # zero is the additive identity for every exponent
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.pi_pow != other.pi_pow:
            raise ValueError(
                f"cannot add pi^{self.pi_pow} and pi^{other.pi_pow} terms"
            )
        return PiScaled(self.coeff + other.coeff, self.pi_pow)

    def __neg__(self) -> PiScaled:
        return PiScaled(-self.coeff, self.pi_pow)

    def __sub__(self, other: PiScaled) -> PiScaled:
        if not isinstance(other, PiScaled):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union[PiScaled, int, Fraction]) -> PiScaled:
        if isinstance(other, PiScaled):
            return PiScaled(self.coeff * other.coeff, self.pi_pow + other.pi_pow)
        if isinstance(other, (int, Fraction)):
            return PiScaled(self.coeff * other, self.pi_pow)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Union[PiScaled, int, Fraction]) -> PiScaled:
        if isinstance(other, PiScaled):
            return PiScaled(self.coeff / other.coeff, self.pi_pow - other.pi_pow)
        if isinstance(other, (int, Fraction)):
            return PiScaled(self.coeff / Fraction(other), self.pi_pow)
        return NotImplemented

    def to_json(self) -> dict:
        return {"coeff": format_rational(self.coeff), "pi_pow": self.pi_pow}

    @classmethod
    def from_json(cls, data: dict) -> PiScaled:
        return cls(parse_rational(data["coeff"]), int(data["pi_pow"]))

    def __str__(self) -> str:
        if self.pi_pow == 0:
            return format_rational(self.coeff)
        return f"{format_rational(self.coeff)}*pi^{self.pi_pow}"


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer_rising(x: RationalLike, n: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+n-1)``; empty product for n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def gamma_ratio(a: int, b: int) -> Fraction:
    """Gamma(a)/Gamma(b) for positive integers a, b."""
    if a < 1 or b < 1:
        raise ValueError("gamma_ratio needs positive integer arguments")
    return Fraction(math.factorial(a - 1), math.factorial(b - 1))


def half_gamma_ratio(a: int, b: int) -> Fraction:
    """Gamma(a + 1/2) / Gamma(b + 1/2) for nonnegative integers a, b.

    The sqrt(pi) factors cancel, leaving a product of half-odd integers.
    """
    if a < 0 or b < 0:
        raise ValueError("half_gamma_ratio needs nonnegative integer arguments")
    out = Fraction(1)
    lo, hi = min(a, b), max(a, b)
    for t in range(lo, hi):
        out *= Fraction(2 * t + 1, 2)
    return out if a >= b else 1 / out


class _BernoulliTable:
    """Growable memo of B_0, B_1, ... (convention B_1 = -1/2).

    Appends happen under a lock; readers only touch the already-filled prefix.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            while len(values) <= n:
                m = len(values)
                # sum_{k=0}^{m} C(m+1, k) B_k = 0
                acc = sum(
                    (math.comb(m + 1, k) * values[k] for k in range(m) if values[k]),
                    Fraction(0),
                )
                values.append(-acc / (m + 1))
            return values[n]


_BERNOULLI = _BernoulliTable()


def bernoulli_number(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _BERNOULLI.get(n)


def zeta_even_ratio(k: int) -> Fraction:
    """Z(k) = zeta(2k) / pi^(2k), an exact positive rational for k >= 1."""
    if k < 1:
        raise ValueError("zeta_even_ratio needs k >= 1")
    sign = 1 if k % 2 == 1 else -1
    return sign * bernoulli_number(2 * k) * 2 ** (2 * k - 1) / math.factorial(2 * k)


def zeta_even(k: int) -> PiScaled:
    """zeta(2k) as ``Z(k) * pi^(2k)``."""
    return PiScaled(zeta_even_ratio(k), 2 * k)


def bernoulli_poly(k: int, x: RationalLike) -> Fraction:
    if k < 0:
        raise ValueError("k must be >= 0")
    x = Fraction(x)
    return sum(
        (math.comb(k, j) * bernoulli_number(j) * x ** (k - j) for j in range(k + 1)),
        Fraction(0),
    )
