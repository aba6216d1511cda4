from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from trigsums.exact import PiScaled, zeta_even_ratio as Z
from trigsums.oracle import check_exact_vs_numeric, raw_trig_sum
from trigsums.poly import RationalPolynomial
from trigsums.sums import (
    MSQ,
    SumPolynomial,
    UnsupportedSumError,
    cc_polynomial,
    cc_sum,
    dowker,
    dowker_q_coeffs,
    dowker_table_polynomial,
    gardner_fisher,
    gf_C_coeffs,
    gf_identity_check,
    gf_p_coeffs,
    gf_table_polynomial,
    norlund_identity_check,
    ts_sum,
)
from trigsums.verify import EQ29, EQ32

F = Fraction
X = RationalPolynomial([0, 1], MSQ)


def test_gardner_fisher_examples():
    assert gardner_fisher(2, 1) == PiScaled(F(1, 8), 2)
    assert gardner_fisher(1, 3) == PiScaled(0, 6)
    # 1 + 5/18 - 7/162 = 200/162
    assert gardner_fisher(3, 2) == PiScaled(F(1, 90) * F(200, 162), 4)
    assert gardner_fisher(3, 2).coeff == F(10, 729)


@pytest.mark.parametrize("m", range(1, 21))
def test_fisher_closed_forms(m):
    m2 = F(m * m)
    assert gardner_fisher(m, 1) == PiScaled(F(1, 6) * (1 - 1 / m2), 2)
    assert gardner_fisher(m, 2) == PiScaled(F(1, 90) * (1 + F(5, 2) / m2 - F(7, 2) / m2**2), 4)


def test_gf_table_rows():
    assert gf_table_polynomial(1).poly == RationalPolynomial([2 * Z(1)], MSQ)
    assert gf_table_polynomial(2).poly == RationalPolynomial([14, 4], MSQ) * Z(2)
    row6 = RationalPolynomial([5710469, 3253469, 1815032, 821182, 262624, 44224], MSQ) * (Z(6) / 691)
    assert gf_table_polynomial(6).poly == row6
    assert gf_table_polynomial(6).divided_by_zeta().poly.coeffs[0] == F(5710469, 691)


@pytest.mark.parametrize("v", range(1, 9))
def test_gf_table_polynomial_reproduces_sum(v):
    R = gf_table_polynomial(v)
    for m in range(1, 8):
        lhs = F(2 * m * m) ** v * gardner_fisher(m, v).coeff
        assert lhs == (m * m - 1) * R(m * m)


def test_gf_p_coefficients():
    assert gf_p_coeffs(0).poly == RationalPolynomial([F(1, 3)], MSQ)
    p1 = gf_p_coeffs(1).poly
    assert p1 == gf_table_polynomial(2).poly
    assert p1.coeff(1) == 4 * Z(2)
    for v in range(1, 9):
        p = gf_p_coeffs(v).poly
        assert p.coeff(v) == 2 ** (v + 1) * Z(v + 1)
        # needs the factor (v+1): 2^(v+1) zeta(2v+2) + (v+1) 2^(v-1) pi^2 zeta(2v)/3
        assert p.coeff(v - 1) == 2 ** (v + 1) * Z(v + 1) + F((v + 1) * 2 ** (v - 1), 3) * Z(v)
        assert p == gf_table_polynomial(v + 1).poly


def test_gf_c_coefficients_rebuild_sum():
    for v in range(1, 8):
        cs = gf_C_coeffs(v)
        assert cs[0] == PiScaled(Z(v), 2 * v)
        for m in (2, 3, 5):
            total = PiScaled(0, 2 * v)
            for i, c in enumerate(cs):
                total = total + c * F(1, m ** (2 * i))
            assert total == gardner_fisher(m, v)


def test_dowker_examples():
    assert dowker(3, 1) == F(8, 3)
    assert dowker(2, 2) == 1
    assert dowker(1, 5) == 0
    assert dowker_table_polynomial(1).poly == RationalPolynomial([F(1, 3)], MSQ)
    assert dowker_table_polynomial(3).poly == RationalPolynomial([191, 23, 2], MSQ) * F(1, 945)
    row4 = (X + 11) * (3 * X * X + 10 * X + 227) * (2 * Z(4) / 3)
    assert dowker_table_polynomial(4).poly == row4


@pytest.mark.parametrize("v", range(1, 9))
def test_dowker_polynomials(v):
    q = dowker_q_coeffs(v)
    T = dowker_table_polynomial(v)
    assert q.poly == T.poly * (X - 1)
    for m in range(1, 8):
        assert dowker(m, v) == q(m * m)


def test_sum_polynomial_json():
    T = dowker_table_polynomial(3)
    data = T.to_json()
    assert data == {"family": "dowker_T", "v": 3, "var": "msq", "coeffs": ["191/945", "23/945", "2/945"]}
    assert SumPolynomial.from_json(data) == T
    R = gf_table_polynomial(4).divided_by_zeta()
    assert SumPolynomial.from_json(R.to_json()) == R


def test_identity_reports():
    assert gf_identity_check(10).ok
    assert norlund_identity_check(8).ok


def test_cc_examples():
    for m in range(1, 10):
        assert cc_sum(m, 0, 1, 1) == F(m * m - 1, 3)
    assert cc_polynomial(0, 1, 1) == (X - 1) * F(1, 3)
    assert cc_polynomial(5, 4, 2) == EQ29
    assert cc_polynomial(6, 3, 1) == EQ32
    assert cc_sum(7, 5, 4, 2) == EQ29(49)
    assert cc_sum(7, 6, 3, 1) == EQ32(49)


def test_cc_polynomial_factors():
    # factored presentation: (m^2-1)(4m^2-1) and (m^2-1)(m^2-4)
    EQ29.exact_div((X - 1) * (4 * X - 1))
    EQ32.exact_div((X - 1) * (X - 4))


def test_cc_w0_handled_by_sum_only():
    with pytest.raises(UnsupportedSumError):
        cc_polynomial(2, 0, 1)
    # cot^2(k pi/3) = 1/3 for k = 1, 2
    assert cc_sum(3, 1, 0, 1) == F(2, 3)


def test_cc_rejects_bad_ell():
    with pytest.raises(UnsupportedSumError):
        cc_sum(5, 1, 1, 3)
    with pytest.raises(ValueError):
        cc_sum(5, 0, 0, 1)


def test_ts_examples():
    assert ts_sum(2, 3, 4) == 0
    assert ts_sum(6, 0, 1) == F(32, 3)
    assert ts_sum(14, 5, 4) == 2 * EQ29(49)
    for m in (3, 5, 11):
        with pytest.raises(UnsupportedSumError):
            ts_sum(m, 1, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8), st.integers(0, 9), st.integers(0, 9))
def test_ts_reduction(n, v, w):
    if v + w == 0 or v + w > 9:
        return
    assert ts_sum(2 * n, v, w) == 2 * cc_sum(n, v, w, 2)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 12), st.integers(0, 5), st.integers(1, 5), st.sampled_from([1, 2]))
def test_cc_sum_against_oracle(m, v, w, ell):
    numeric = raw_trig_sum(m, v, w, ell, "cc", 40)
    assert check_exact_vs_numeric(cc_sum(m, v, w, ell), numeric, 40)
