"""Generalized cosecant numbers c_{rho,k}.

c_{rho,k} is the coefficient of x**(2k) in (x/sin x)**rho and is a degree-k
polynomial in rho. Three independent routes are provided:

* the partition method (sum over integer partitions of k),
* interpolation through rho = 0..k of the power-series coefficients,
* for even rho = 2n, a recurrence in n seeded by the zeta values at rho = 2,

plus the C(n, j) ladder representation of c_{2n,k}.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .exact import (
    bernoulli_number,
    factorial,
    gamma_ratio,
    half_gamma_ratio,
    zeta_even_ratio,
)
from .partitions import PartitionMultiplicities, enumerate_partitions
from .poly import RationalPolynomial
from .series import gcn_by_series

__all__ = [
    "rising_factorial_poly",
    "partition_contributions",
    "gcn_partition_method",
    "gcn_by_interpolation",
    "gcn_by_even_recurrence",
    "interpolate",
    "gcn_even_recurrence",
    "gcn_polynomial",
    "CLadder",
    "build_c_ladder",
    "gcn_via_c_ladder",
    "cosecant_number",
]

RHO = "rho"


def rising_factorial_poly(n: int, var: str = RHO) -> RationalPolynomial:
    """(rho)_n = rho (rho+1) ... (rho+n-1) as a polynomial in rho."""
    out = RationalPolynomial([1], var)
    for i in range(n):
        out = out * RationalPolynomial([i, 1], var)
    return out


def _partition_weight(p: PartitionMultiplicities) -> Fraction:
    # prod_i (1/(2i+1)!)^{n_i} / n_i!
    w = Fraction(1)
    for i, n_i in p.multiplicities:
        w /= factorial(2 * i + 1) ** n_i * factorial(n_i)
    return w


def partition_contributions(k: int) -> Iterator[tuple[PartitionMultiplicities, RationalPolynomial]]:
    """Per-partition terms of c_{rho,k}: (-1)^(k+N) (rho)_N prod (1/(2i+1)!)^n_i / n_i!."""
    for p in enumerate_partitions(k):
        big_n = p.num_parts
        sign = -1 if (k + big_n) % 2 else 1
        yield p, rising_factorial_poly(big_n) * (sign * _partition_weight(p))


_gcn_cache: dict[int, RationalPolynomial] = {}
_gcn_lock = threading.Lock()


def gcn_partition_method(k: int) -> RationalPolynomial:
    """c_{rho,k} as a polynomial in rho by folding over the partitions of k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    cached = _gcn_cache.get(k)
    if cached is not None:
        return cached
    total = RationalPolynomial([], RHO)
    for _, term in partition_contributions(k):
        total = total + term
    with _gcn_lock:
        _gcn_cache.setdefault(k, total)
    return total


gcn_polynomial = gcn_partition_method


def interpolate(xs: list[int], ys: list[Fraction], var: str = RHO) -> RationalPolynomial:
    """Newton divided differences through the points (xs[i], ys[i])."""
    if len(xs) != len(ys) or not xs:
        raise ValueError("need matching, nonempty xs and ys")
    table = list(ys)
    divided = [table[0]]
    for level in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)
        ]
        divided.append(table[0])
    out = RationalPolynomial([], var)
    for i in range(len(divided) - 1, -1, -1):
        out = out * RationalPolynomial([-xs[i], 1], var) + divided[i]
    return out


def gcn_by_interpolation(k: int) -> RationalPolynomial:
    """Degree-k polynomial through the series values at rho = 0, 1, ..., k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    xs = list(range(k + 1))
    return interpolate(xs, [gcn_by_series(rho, k) for rho in xs])


def gcn_by_even_recurrence(k: int) -> RationalPolynomial:
    """Degree-k polynomial through rho = 0, 2, ..., 2k, using only the even-rho recurrence."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return RationalPolynomial([1], RHO)
    rec = gcn_even_recurrence(k, k)
    xs = [0] + [2 * n for n in range(1, k + 1)]
    ys = [Fraction(0)] + [rec[(n, k)] for n in range(1, k + 1)]
    return interpolate(xs, ys)


def gcn_even_recurrence(n_max: int, k_max: int) -> dict[tuple[int, int], Fraction]:
    """Table ``{(n, k): c_{2n,k}}`` for 1 <= n <= n_max, 0 <= k <= k_max.

    Row n = 1 is c_{2,k} = 2(2k-1) Z(k) for k >= 1 with c_{2,0} = 1; later rows
    come from

        c_{2n+2,k+1} = (2k+2-2n)/(2n) * (2k+1-2n)/(2n+1) * c_{2n,k+1}
                       + 2n/(2n+1) * c_{2n,k}.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    c: dict[tuple[int, int], Fraction] = {(1, 0): Fraction(1)}
    for k in range(1, k_max + 1):
        c[(1, k)] = 2 * (2 * k - 1) * zeta_even_ratio(k)
    for n in range(1, n_max):
        c[(n + 1, 0)] = Fraction(1)
        for k in range(k_max):
            c[(n + 1, k + 1)] = (
                Fraction(2 * k + 2 - 2 * n, 2 * n)
                * Fraction(2 * k + 1 - 2 * n, 2 * n + 1)
                * c[(n, k + 1)]
                + Fraction(2 * n, 2 * n + 1) * c[(n, k)]
            )
    return c


@dataclass(frozen=True)
class CLadder:
    """C(n, j) for 1 <= n <= n_max and 0 <= j <= n-1."""

    n_max: int
    entries: dict[tuple[int, int], Fraction]

    def __call__(self, n: int, j: int) -> Fraction:
        return self.entries.get((n, j), Fraction(0))


@lru_cache(maxsize=None)
def build_c_ladder(n_max: int) -> CLadder:
    """C(n,j) = C(n-1,j) + (n-1)^2/(j-1/2) C(n-1,j-1) with C(1,0) = 2."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    entries = {(1, 0): Fraction(2)}
    for n in range(2, n_max + 1):
        for j in range(n):
            value = entries.get((n - 1, j), Fraction(0))
            if j >= 1:
                value += Fraction((n - 1) ** 2) / (Fraction(j) - Fraction(1, 2)) * entries[(n - 1, j - 1)]
            entries[(n, j)] = value
    return CLadder(n_max, entries)


def gcn_via_c_ladder(n: int, k: int) -> Fraction:
    """c_{2n,k} from the C(n, j) ladder, for k >= n.

    The sum is

        sum_{j<n} G(k-j)/G(k-n+1) * G(k-j+1/2)/G(k-n+1/2) * 1/G(n)
                  * G(j+1/2)/G(n+1/2) * C(n,j) * Z(k-j)

    with G the gamma function. With the seed C(1,0) = 2 the overall prefactor
    is 1, not 4.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < n:
        raise ValueError(f"gamma arguments are nonpositive for k={k} < n={n}")
    ladder = build_c_ladder(n)
    total = Fraction(0)
    for j in range(n):
        total += (
            gamma_ratio(k - j, k - n + 1)
            * half_gamma_ratio(k - j, k - n)
            / factorial(n - 1)
            * half_gamma_ratio(j, n)
            * ladder(n, j)
            * zeta_even_ratio(k - j)
        )
    return total


def cosecant_number(k: int) -> Fraction:
    """c_k, the coefficient of x**(2k) in x/sin x.

    Computed both from the Bernoulli number B_{2k} and from Z(k); the two are
    asserted equal.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(1)
    from_bernoulli = Fraction((-1) ** (k + 1), factorial(2 * k)) * (2 ** (2 * k) - 2) * bernoulli_number(2 * k)
    from_zeta = 2 * (1 - Fraction(1, 2 ** (2 * k - 1))) * zeta_even_ratio(k)
    if from_bernoulli != from_zeta:
        raise ArithmeticError(f"cosecant number forms disagree at k={k}")
    return from_bernoulli
