"""Exact closed forms for the Gardner-Fisher and untwisted Dowker sums and their relatives.

Conventions
-----------
Every zeta(2k) is written as Z(k) * pi^(2k) with Z(k) rational, so all
polynomial families are stored over plain rationals in the variable
``msq`` = m^2:

* ``gf_R``     R_v(m^2) = (2m^2)^v S_{m,v} / (m^2-1), divided by pi^(2v)
* ``gf_p``     p_v with S_{m,v+1} = (2m^2)^(-v-1) (m^2-1) p_v(m^2), divided by pi^(2v+2)
* ``dowker_q`` q_v(m^2) = sum_{k=1}^{m-1} csc^(2v)(k pi/m)
* ``dowker_T`` T_v(m^2) = q_v(m^2) / (m^2-1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cosecant import gcn_partition_method
from .exact import (
    PiScaled,
    bernoulli_number,
    binomial,
    factorial,
    gamma_ratio,
    half_gamma_ratio,
    zeta_even_ratio,
)
from .poly import RationalPolynomial
from .report import VerificationReport
from .series import norlund_poly_value
from .symfun import sym

__all__ = [
    "UnsupportedSumError",
    "SumPolynomial",
    "gardner_fisher",
    "gf_table_polynomial",
    "gf_p_coeffs",
    "gf_C_coeffs",
    "dowker",
    "dowker_q_coeffs",
    "dowker_table_polynomial",
    "csc_power_sum",
    "cc_sum",
    "cc_polynomial",
    "ts_sum",
    "norlund_identity_check",
    "gf_identity_check",
    "MSQ",
]

MSQ = "msq"
Z = zeta_even_ratio


class UnsupportedSumError(ValueError):
    """Raised for sums outside the supported closed forms (e.g. odd-m tangent-secant sums)."""


def _c2v(v: int, i: int) -> Fraction:
    return gcn_partition_method(i)(2 * v)


@dataclass(frozen=True)
class SumPolynomial:
    """A polynomial family member in m^2, pi-normalized.

    ``zeta_norm`` is True when the coefficients have additionally been divided
    by the family's leading zeta ratio (Z(v), or Z(v+1) for ``gf_p``).
    """

    family: str
    v: int
    poly: RationalPolynomial
    zeta_norm: bool = False

    @property
    def zeta_index(self) -> int:
        return self.v + 1 if self.family == "gf_p" else self.v

    def divided_by_zeta(self) -> SumPolynomial:
        if self.zeta_norm:
            return self
        return SumPolynomial(self.family, self.v, self.poly * (1 / Z(self.zeta_index)), True)

    def __call__(self, msq: int | Fraction) -> Fraction:
        return self.poly(msq)

    def to_json(self) -> dict:
        data = {"family": self.family, "v": self.v}
        data.update(self.poly.to_json())
        if self.zeta_norm:
            data["zeta_norm"] = True
        return data

    @classmethod
    def from_json(cls, data: dict) -> SumPolynomial:
        return cls(data["family"], int(data["v"]), RationalPolynomial.from_json(data),
                   bool(data.get("zeta_norm", False)))


def _check_mv(m: int, v: int) -> None:
    if m < 1:
        raise ValueError("m must be >= 1")
    if v < 1:
        raise ValueError("v must be >= 1")


# ---------------------------------------------------------------------------
# Gardner-Fisher sum
# ---------------------------------------------------------------------------


def gardner_fisher(m: int, v: int) -> PiScaled:
    """S_{m,v} = (pi/2m)^(2v) sum_{k<m} sec^(2v)(k pi/2m) as an exact multiple of pi^(2v).

    S_{m,v} = 1/(2v-1)! sum_{n<v} (pi/m)^(2n) s(v,n) Gamma(2v-2n) zeta(2v-2n) (1 - m^(2n-2v))
    """
    _check_mv(m, v)
    m2 = Fraction(m * m)
    total = Fraction(0)
    for n in range(v):
        e = v - n
        total += sym(v, n) * factorial(2 * e - 1) * Z(e) * (1 - 1 / m2**e) / m2**n
    return PiScaled(total / factorial(2 * v - 1), 2 * v)


def _gf_numerator(v: int) -> RationalPolynomial:
    # (2x)^v S / pi^(2v) = 2^v/(2v-1)! sum_n s(v,n) Gamma(2v-2n) Z(v-n) (x^(v-n) - 1)
    out = RationalPolynomial([], MSQ)
    for n in range(v):
        e = v - n
        a = Fraction(2**v, factorial(2 * v - 1)) * sym(v, n) * factorial(2 * e - 1) * Z(e)
        out = out + (RationalPolynomial.monomial(e, a, MSQ) - a)
    return out


@lru_cache(maxsize=None)
def gf_table_polynomial(v: int) -> SumPolynomial:
    """R_v(m^2) = (2m^2)^v S_{m,v} / ((m^2-1) pi^(2v)); the division must be exact."""
    if v < 1:
        raise ValueError("v must be >= 1")
    poly = _gf_numerator(v).exact_div(RationalPolynomial([-1, 1], MSQ))
    return SumPolynomial("gf_R", v, poly)


@lru_cache(maxsize=None)
def gf_p_coeffs(v: int) -> SumPolynomial:
    """p_v, computed three ways and cross-checked.

    1. top coefficient p_{v,v} = 2^(v+1) zeta(2v+2), then the downward step
       p_{v,j-1} = p_{v,j} + 2^(v+1)/(2v+1)! pi^(2v+2-2j) s(v+1,v+1-j) Gamma(2j) zeta(2j);
    2. the closed sum for p_{v,0};
    3. R_{v+1} from exact division.

    Also p_{v,v-1} = 2^(v+1) zeta(2v+2) + (v+1) 2^(v-1) pi^2 zeta(2v)/3.
    """
    if v < 0:
        raise ValueError("v must be >= 0")
    big = v + 1
    pref = Fraction(2**big, factorial(2 * big - 1))
    coeffs = [Fraction(0)] * (v + 1)
    coeffs[v] = 2**big * Z(big)
    for j in range(v, 0, -1):
        coeffs[j - 1] = coeffs[j] + pref * sym(big, big - j) * factorial(2 * j - 1) * Z(j)
    stepped = RationalPolynomial(coeffs, MSQ)

    p0 = pref * sum(
        (sym(big, j) * factorial(2 * big - 2 * j - 1) * Z(big - j) for j in range(big)),
        Fraction(0),
    )
    if p0 != stepped.coeff(0):
        raise ArithmeticError(f"p_{v},0 closed sum disagrees with the step relation")
    if v >= 1:
        p_next = 2**big * Z(big) + Fraction((v + 1) * 2**v, 2 * 3) * Z(v)
        if p_next != stepped.coeff(v - 1):
            raise ArithmeticError(f"p_{v},{v - 1} disagrees with the step relation")
    if gf_table_polynomial(big).poly != stepped:
        raise ArithmeticError(f"p_{v} disagrees with R_{big}")
    return SumPolynomial("gf_p", v, stepped)


def gf_C_coeffs(v: int) -> list[PiScaled]:
    """C^v_i, the coefficients of m^(-2i) in S_{m,v}, for i = 0..v.

    C^v_i = c_{2v,i} zeta(2v-2i) (pi/2)^(2i) for i < v. The last one is computed
    both as 2^v (pi/2)^(2v) - sum_i 2^(2v-2i) C^v_i and as
    -(c_{2v,v} + 1)/2 (pi/2)^(2v); the two must agree.
    """
    if v < 1:
        raise ValueError("v must be >= 1")
    pi2v = 2 * v
    out = [PiScaled(_c2v(v, i) * Z(v - i) / 4**i, pi2v) for i in range(v)]
    first = PiScaled(Fraction(2**v, 4**v), pi2v)
    for i, c in enumerate(out):
        first = first - c * 2 ** (2 * v - 2 * i)
    second = PiScaled(-(_c2v(v, v) + 1) / 2 / 4**v, pi2v)
    if first != second:
        raise ArithmeticError(f"the two forms of C^{v}_{v} disagree: {first} vs {second}")
    out.append(second)
    return out


def gf_identity_check(v_max: int) -> VerificationReport:
    """Identities tying c_{2v,i}, s(v,i) and the C^v_i, all pi-normalized and exact."""
    report = VerificationReport("gf-identities")
    for v in range(1, v_max + 1):
        # weighted sum over i < v of (4^(v-i) c - 4^i s G/(2v-1)!) 4^(v-i) Z(v-i)
        total = Fraction(0)
        for i in range(v):
            bracket = 4 ** (v - i) * _c2v(v, i) - Fraction(
                4**i * sym(v, i) * factorial(2 * v - 2 * i - 1), factorial(2 * v - 1)
            )
            total += bracket * 4 ** (v - i) * Z(v - i)
        report.add(f"weighted-sum v={v}", "sum_i (...) = 2^v", total, 2**v)

        lhs = sum(
            (sym(v, n) * factorial(2 * v - 2 * n - 1) * Z(v - n) for n in range(v)), Fraction(0)
        )
        rhs = Fraction(factorial(2 * v - 1)) * (_c2v(v, v) + 1) / 2 / 4**v
        report.add(f"gamma-zeta sum v={v}", "sum_n pi^2n s G zeta = G(2v)(c+1)/2 (pi/2)^2v",
                   lhs, rhs)

        coeffs = gf_C_coeffs(v)
        # the (2v)_{-2n} reading: Gamma(2v-2i)/Gamma(2v) pi^(2i) zeta(2v-2i) s(v,i)
        for i in range(v):
            alt = PiScaled(gamma_ratio(2 * v - 2 * i, 2 * v) * Z(v - i) * sym(v, i), 2 * v)
            report.add(f"C^{v}_{i} symmetric form", "C^v_i via s(v,i)", coeffs[i], alt)
        alt_last = PiScaled(
            -sum((gamma_ratio(2 * v - 2 * n, 2 * v) * Z(v - n) * sym(v, n) for n in range(v)),
                 Fraction(0)),
            2 * v,
        )
        report.add(f"C^{v}_{v} symmetric form", "C^v_v via s(v,n)", coeffs[v], alt_last)
        for m in (2, 3, 7):
            expansion = sum(
                (c.coeff / Fraction(m) ** (2 * i) for i, c in enumerate(coeffs)), Fraction(0)
            )
            report.add(f"C-expansion v={v} m={m}", "sum_i C^v_i m^-2i = S_{m,v}",
                       PiScaled(expansion, 2 * v), gardner_fisher(m, v))
    return report


# ---------------------------------------------------------------------------
# untwisted Dowker sum
# ---------------------------------------------------------------------------


def dowker(m: int, v: int) -> Fraction:
    """sum_{k=1}^{m-1} csc^(2v)(k pi/m), exactly.

    = 2^(2v+1) sum_{n<v} (m/2pi)^(2v-2n) Gamma(2v-2n)/Gamma(2v) s(v,n) (1 - m^(2n-2v)) zeta(2v-2n)
    """
    _check_mv(m, v)
    m2 = Fraction(m * m)
    total = Fraction(0)
    for n in range(v):
        e = v - n
        total += (m2 / 4) ** e * gamma_ratio(2 * e, 2 * v) * sym(v, n) * (1 - 1 / m2**e) * Z(e)
    return 2 ** (2 * v + 1) * total


@lru_cache(maxsize=None)
def dowker_q_coeffs(v: int) -> SumPolynomial:
    """q_v(m^2) with coefficients q_{v,i}, cross-checked against their closed forms.

    Primary route: expand the closed form for the Dowker sum in powers of m^2.
    Checked against the symmetric-polynomial forms of q_{v,0}, q_{v,i} (0 < i < v),
    q_{v,v} = 2 Z(v), q_{v,1} = Gamma(v) Gamma(1/2) / (6 Gamma(v+1/2)), and the
    generalized-cosecant forms of q_{v,0} and q_{v,i}.
    """
    if v < 1:
        raise ValueError("v must be >= 1")
    coeffs = [Fraction(0)] * (v + 1)
    for n in range(v):
        e = v - n
        a = Fraction(2 ** (2 * v + 1), 4**e) * gamma_ratio(2 * e, 2 * v) * sym(v, n) * Z(e)
        coeffs[e] += a
        coeffs[0] -= a

    expected: dict[int, list[Fraction]] = {i: [] for i in range(v + 1)}
    expected[0].append(
        -(2 ** (2 * v + 1))
        * sum(
            (Fraction(1, 4 ** (v - n)) * gamma_ratio(2 * v - 2 * n, 2 * v) * sym(v, n) * Z(v - n)
             for n in range(v)),
            Fraction(0),
        )
    )
    expected[0].append(-2 * sum((_c2v(v, n) * Z(v - n) for n in range(v)), Fraction(0)))
    expected[1].append(Fraction(factorial(v - 1), 6) / half_gamma_ratio(v, 0))
    for i in range(1, v):
        expected[i].append(
            Fraction(2 ** (2 * v - 2 * i + 1)) * gamma_ratio(2 * i, 2 * v) * sym(v, v - i) * Z(i)
        )
        expected[i].append(2 * _c2v(v, v - i) * Z(i))
    expected[v].append(2 * Z(v))
    for i, values in expected.items():
        for val in values:
            if val != coeffs[i]:
                raise ArithmeticError(f"q_{v},{i}: {coeffs[i]} vs closed form {val}")
    return SumPolynomial("dowker_q", v, RationalPolynomial(coeffs, MSQ))


@lru_cache(maxsize=None)
def dowker_table_polynomial(v: int) -> SumPolynomial:
    """T_v(m^2) = q_v(m^2) / (m^2 - 1); the division must be exact."""
    q = dowker_q_coeffs(v).poly
    return SumPolynomial("dowker_T", v, q.exact_div(RationalPolynomial([-1, 1], MSQ)))


def _norlund_reconstruction(v: int) -> RationalPolynomial:
    # (-1)^(v-1) 4^v/(2v)! sum_n C(2v,2n) B_{2v-2n} B^(2v)_{2n}(v) x^(v-n)
    pref = Fraction((-1) ** (v - 1) * 4**v, factorial(2 * v))
    coeffs = [Fraction(0)] * (v + 1)
    for n in range(v + 1):
        coeffs[v - n] = (
            pref * binomial(2 * v, 2 * n) * bernoulli_number(2 * v - 2 * n)
            * norlund_poly_value(2 * v, 2 * n, v)
        )
    return RationalPolynomial(coeffs, MSQ)


def norlund_identity_check(v_max: int) -> VerificationReport:
    """Values B^(2v)_{2n}(v) from the generating function vs. the s(v,n) and c_{2v,n} forms.

    Also rebuilds q_v(m^2) from Bernoulli numbers and Norlund values, with the
    prefactor read as 4^v/(2v)! outside the sum.
    """
    if v_max < 1:
        raise ValueError("v_max must be >= 1")
    report = VerificationReport("norlund")
    for v in range(1, v_max + 1):
        for n in range(v):
            gen = norlund_poly_value(2 * v, 2 * n, v)
            by_sym = (-1) ** n * factorial(2 * n) * gamma_ratio(2 * v - 2 * n, 2 * v) * sym(v, n)
            by_gcn = Fraction((-1) ** n * factorial(2 * n), 4**n) * _c2v(v, n)
            report.add(f"B^({2 * v})_{2 * n}({v}) sym", "B = (-1)^n (2n)! G(2v-2n)/G(2v) s(v,n)",
                       gen, by_sym)
            report.add(f"B^({2 * v})_{2 * n}({v}) gcn", "B = (-1)^n 4^-n (2n)! c_{2v,n}",
                       gen, by_gcn)
        gen = norlund_poly_value(2 * v, 2 * v, v)
        by_sym = (-1) ** v * 4 * v * sum(
            (Fraction(1, 4 ** (v - n)) * factorial(2 * v - 2 * n - 1) * sym(v, n) * Z(v - n)
             for n in range(v)),
            Fraction(0),
        )
        by_gcn = (-1) ** v * Fraction(2, 4**v) * factorial(2 * v) * sum(
            (_c2v(v, n) * Z(v - n) for n in range(v)), Fraction(0)
        )
        report.add(f"B^({2 * v})_{2 * v}({v}) sym", "B_2v = (-1)^v 4v sum (2pi)^(2n-2v) G s zeta",
                   gen, by_sym)
        report.add(f"B^({2 * v})_{2 * v}({v}) gcn", "B_2v via c_{2v,n}", gen, by_gcn)
        report.add(f"q_{v} reconstruction", "q_v from Bernoulli x Norlund",
                   _norlund_reconstruction(v), dowker_q_coeffs(v).poly)
    return report


# ---------------------------------------------------------------------------
# cotangent-cosecant and tangent-secant sums
# ---------------------------------------------------------------------------


def csc_power_sum(m: int, u: int, ell: int) -> Fraction:
    """sum_{k=1}^{m-1} csc^(2u)(k pi/(ell m)) for ell in {1, 2}; u = 0 gives m - 1."""
    if ell not in (1, 2):
        raise UnsupportedSumError(f"closed forms exist only for ell = 1, 2 (got {ell})")
    if m < 1:
        raise ValueError("m must be >= 1")
    if u < 0:
        raise ValueError("u must be >= 0")
    if u == 0:
        return Fraction(m - 1)
    if ell == 1:
        return dowker(m, u)
    # (2m/pi)^(2u) S_{m,u}
    return Fraction(4 * m * m) ** u * gardner_fisher(m, u).coeff


def _check_vw(v: int, w: int) -> None:
    if v < 0 or w < 0:
        raise ValueError("v and w must be >= 0")
    if v + w == 0:
        raise ValueError("v + w must be >= 1")


def cc_sum(m: int, v: int, w: int, ell: int) -> Fraction:
    """sum_{k=1}^{m-1} cot^(2v)(k pi/(ell m)) csc^(2w)(k pi/(ell m)), exactly.

    Expands cot^2 = csc^2 - 1 binomially into csc-power sums.
    """
    _check_vw(v, w)
    if ell not in (1, 2):
        raise UnsupportedSumError(f"closed forms exist only for ell = 1, 2 (got {ell})")
    total = Fraction(0)
    for j in range(v + 1):
        total += (-1) ** (v - j) * binomial(v, j) * csc_power_sum(m, w + j, ell)
    return total


@lru_cache(maxsize=None)
def cc_polynomial(v: int, w: int, ell: int) -> RationalPolynomial:
    """The cotangent-cosecant sum as a polynomial in m^2 (requires w >= 1 or v = 0).

    Built from the tabulated families, (m^2-1) sum_j (-1)^(v-j) C(v,j) X_{w+j}
    with X = 2^u R_u (ell=2) or T_u (ell=1), and checked against the
    coefficient-level route through C^u_i (ell=2) or q_{u,i} (ell=1).
    """
    _check_vw(v, w)
    if ell not in (1, 2):
        raise UnsupportedSumError(f"closed forms exist only for ell = 1, 2 (got {ell})")
    if w == 0:
        # the j = 0 term is sum_k 1 = m - 1, not a polynomial in m^2
        raise UnsupportedSumError("w = 0 with v >= 1 is not a polynomial in m^2; use cc_sum")
    table_route = RationalPolynomial([], MSQ)
    coeff_route = RationalPolynomial([], MSQ)
    for j in range(v + 1):
        u = w + j
        sign = (-1) ** (v - j) * binomial(v, j)
        if ell == 2:
            table_route = table_route + gf_table_polynomial(u).poly * (sign * 2**u)
            cs = gf_C_coeffs(u)
            inner = RationalPolynomial(
                [cs[u - d].coeff * 4**u for d in range(u + 1)], MSQ
            )
        else:
            table_route = table_route + dowker_table_polynomial(u).poly * sign
            inner = dowker_q_coeffs(u).poly
        coeff_route = coeff_route + inner * sign
    table_route = table_route * RationalPolynomial([-1, 1], MSQ)
    if table_route != coeff_route:
        raise ArithmeticError(f"cc_polynomial({v},{w},{ell}): table and coefficient routes differ")
    return table_route


def ts_sum(m: int, v: int, w: int) -> Fraction:
    """sum over k = 1..m-1, k != m/2, of tan^(2v)(k pi/m) sec^(2w)(k pi/m), for even m.

    Folding k -> m - k and then k -> m/2 - k turns it into twice the
    cotangent-cosecant sum at (m/2, v, w, ell=2). Odd m leads to an alternating
    sum and is rejected.
    """
    _check_vw(v, w)
    if m < 2 or m % 2:
        raise UnsupportedSumError(f"tangent-secant sums need even m >= 2 (got m={m})")
    return 2 * cc_sum(m // 2, v, w, 2)
