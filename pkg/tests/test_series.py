from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from trigsums.series import (
    TruncatedSeries,
    gcn_by_series,
    norlund_poly_value,
    series_int_pow,
    series_mul,
    series_reciprocal,
    xcsc_series,
)

F = Fraction


def test_series_mul():
    assert series_mul(TruncatedSeries([1, 1]), TruncatedSeries([1, 1])).coefficients == (1, 2)
    a = TruncatedSeries([1, 0, F(-1, 6)])
    b = TruncatedSeries([1, 0, F(1, 6)])
    assert series_mul(a, b).coefficients == (1, 0, 0)
    s = TruncatedSeries([3, F(1, 2), 7])
    assert series_mul(TruncatedSeries.identity(2), s).coefficients == s.coefficients


def test_series_reciprocal():
    sinc = TruncatedSeries([1, 0, F(-1, 6), 0, F(1, 120)])
    assert series_reciprocal(sinc).coefficients == (1, 0, F(1, 6), 0, F(7, 360))
    ident = TruncatedSeries.identity(4)
    assert series_reciprocal(ident).coefficients == ident.coefficients
    with pytest.raises(ZeroDivisionError):
        series_reciprocal(TruncatedSeries([0, 1]))


@given(st.lists(st.fractions(max_denominator=30, min_value=-5, max_value=5), min_size=6, max_size=7),
       st.fractions(max_denominator=30, min_value=1, max_value=5))
def test_reciprocal_involution(tail, lead):
    s = TruncatedSeries([lead] + tail[:6])
    assert series_reciprocal(series_reciprocal(s)).coefficients == s.coefficients
    assert series_mul(s, series_reciprocal(s)).coefficients == TruncatedSeries.identity(s.order).coefficients


def test_series_int_pow():
    a = TruncatedSeries([2, F(1, 3), 5])
    assert series_int_pow(a, 0).coefficients == (1, 0, 0)
    assert series_int_pow(a, 1).coefficients == a.coefficients
    assert series_int_pow(TruncatedSeries([1, 1, 0]), 3).coefficients == (1, 3, 3)
    assert series_int_pow(a, 5).coefficients == series_mul(series_int_pow(a, 2), series_int_pow(a, 3)).coefficients


def test_xcsc_against_mpmath():
    coeffs = xcsc_series(12).coefficients
    # x/sin x = sum (-1)^(k+1) (2^(2k) - 2) B_2k x^(2k) / (2k)!, with mpmath's Bernoulli numbers
    with mpmath.workdps(50):
        for k, c in enumerate(coeffs):
            ref = (-1) ** (k + 1) * (2 ** (2 * k) - 2) * mpmath.bernoulli(2 * k) / mpmath.factorial(2 * k)
            assert abs(mpmath.mpf(c.numerator) / c.denominator - ref) <= abs(ref) * mpmath.mpf(10) ** -40


def test_gcn_by_series_examples():
    assert gcn_by_series(1, 2) == F(7, 360)
    assert gcn_by_series(2, 1) == F(1, 3)
    assert gcn_by_series(4, 2) == F(11, 45)
    assert gcn_by_series(0, 0) == 1 and gcn_by_series(0, 3) == 0


def test_norlund_values():
    assert norlund_poly_value(4, 2, 2) == F(-1, 3)
    assert norlund_poly_value(2, 1, 1) == 0
    # order 1 reduces to the ordinary Bernoulli polynomials
    from trigsums.exact import bernoulli_poly

    for k in range(8):
        assert norlund_poly_value(1, k, F(2, 3)) == bernoulli_poly(k, F(2, 3))
