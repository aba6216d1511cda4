"""Elementary symmetric polynomials s(v, n) of the squares 1, 4, ..., (v-1)^2."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .cosecant import gcn_partition_method
from .exact import gamma_ratio, pochhammer_rising
from .report import VerificationReport

__all__ = [
    "SymTable",
    "sym_table",
    "sym",
    "sym_direct",
    "sym_closed_form_checks",
    "bridge_identity_check",
]


@dataclass(frozen=True)
class SymTable:
    """Rows ``values[v-1] = [s(v,0), ..., s(v,v-1)]`` for v = 1..v_max."""

    v_max: int
    values: tuple[tuple[int, ...], ...]

    def __call__(self, v: int, n: int) -> int:
        if v < 1 or v > self.v_max:
            raise IndexError(f"v={v} outside table 1..{self.v_max}")
        if n < 0 or n > v - 1:
            return 0
        return self.values[v - 1][n]

    def row(self, v: int) -> tuple[int, ...]:
        return self.values[v - 1]


@lru_cache(maxsize=None)
def sym_table(v_max: int) -> SymTable:
    """Build rows by s(n+1, k+1) = s(n, k+1) + n^2 s(n, k) from s(1, 0) = 1."""
    if v_max < 1:
        raise ValueError("v_max must be >= 1")
    rows = [(1,)]
    for n in range(1, v_max):
        prev = rows[-1]
        row = [1]
        for k in range(n):
            above = prev[k + 1] if k + 1 < len(prev) else 0
            row.append(above + n * n * prev[k])
        rows.append(tuple(row))
    return SymTable(v_max, tuple(rows))


def sym(v: int, n: int) -> int:
    """s(v, n), growing the cached table as needed."""
    size = 16
    while size < v:
        size *= 2
    return sym_table(size)(v, n)


def sym_direct(v: int, n: int) -> int:
    """s(v, n) by summing products over all n-subsets (small v only)."""
    if v < 1 or v > 14:
        raise ValueError("direct enumeration is limited to 1 <= v <= 14")
    if n < 0 or n > v - 1:
        raise ValueError(f"n={n} outside 0..{v - 1}")
    squares = [j * j for j in range(1, v)]
    return sum(math.prod(c) for c in combinations(squares, n))


def _inverse_power_partial(v: int, s: int) -> Fraction:
    # zeta(s) - zeta(s, v) = sum_{j=1}^{v-1} j^{-s}
    return sum((Fraction(1, j**s) for j in range(1, v)), Fraction(0))


def sym_closed_form_checks(v_max: int) -> VerificationReport:
    """Compare the table with the closed forms for n = 1, 2 and n = v-1, v-2, v-3.

    The shifted factorial in s(v,2) = (5v+1)/(4*6!) (2v-4)_5 is the rising one.
    """
    if v_max < 4:
        raise ValueError("v_max must be >= 4")
    table = sym_table(v_max)
    report = VerificationReport("sym-closed-forms")
    for v in range(2, v_max + 1):
        fact2 = math.factorial(v - 1) ** 2
        h2 = _inverse_power_partial(v, 2)
        h4 = _inverse_power_partial(v, 4)
        report.add(f"s({v},1)", "s(v,1)=(v-1)v(2v-1)/6", table(v, 1),
                   Fraction((v - 1) * v * (2 * v - 1), 6))
        report.add(f"s({v},2)", "s(v,2)=(5v+1)/(4*6!)*(2v-4)_5", table(v, 2),
                   Fraction(5 * v + 1, 4 * 720) * pochhammer_rising(2 * v - 4, 5))
        report.add(f"s({v},{v - 1})", "s(v,v-1)=(v-1)!^2", table(v, v - 1), fact2)
        if v >= 3:
            report.add(f"s({v},{v - 2})", "s(v,v-2)=(v-1)!^2*H2", table(v, v - 2), fact2 * h2)
        if v >= 4:
            report.add(f"s({v},{v - 3})", "s(v,v-3)=(v-1)!^2/2*(H2^2-H4)", table(v, v - 3),
                       Fraction(fact2, 2) * (h2 * h2 - h4))
    return report


def bridge_identity_check(v_max: int) -> VerificationReport:
    """c_{2v,i} = 2^(2i) Gamma(2v-2i)/Gamma(2v) s(v,i) for every i < v <= v_max."""
    if v_max < 1:
        raise ValueError("v_max must be >= 1")
    table = sym_table(v_max)
    report = VerificationReport("gcn-sym-bridge")
    for v in range(1, v_max + 1):
        for i in range(v):
            lhs = gcn_partition_method(i)(2 * v)
            rhs = 2 ** (2 * i) * gamma_ratio(2 * v - 2 * i, 2 * v) * table(v, i)
            report.add(f"v={v},i={i}", "c_{2v,i} = 4^i G(2v-2i)/G(2v) s(v,i)", lhs, rhs)
    return report
