from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trigsums.poly import RationalPolynomial, content_split

coeff_lists = st.lists(st.fractions(max_denominator=50, min_value=-100, max_value=100), max_size=6)


def test_trim_and_degree():
    assert RationalPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert RationalPolynomial([]).degree == -1
    assert RationalPolynomial([0, 0, 3]).degree == 2


def test_evaluation_and_arithmetic():
    p = RationalPolynomial([1, 1])
    assert (p * p).coeffs == (1, 2, 1)
    assert (p**3)(2) == 27
    assert (p - p).is_zero()
    assert (2 * p + 1).coeffs == (3, 2)


def test_exact_division():
    x = RationalPolynomial([0, 1])
    q = (x - 1) * (x + 4) * (x * x + 3)
    assert q.exact_div(x - 1) == (x + 4) * (x * x + 3)
    with pytest.raises(ArithmeticError):
        (x * x + 1).exact_div(x - 1)


def test_content_split():
    content, ints = content_split([Fraction(2, 720) * 2, Fraction(2, 720) * 5])
    assert content == Fraction(1, 360) and ints == [2, 5]
    content, ints = content_split([Fraction(-3, 4), Fraction(-1, 2)])
    assert ints == [3, 2] and content == Fraction(-1, 4)
    assert content_split([0, 0]) == (Fraction(0), [0, 0])


@given(coeff_lists, coeff_lists)
def test_ring_properties(a, b):
    p, q = RationalPolynomial(a), RationalPolynomial(b)
    assert p * q == q * p
    assert (p + q) - q == p
    for x in (0, 1, Fraction(-3, 2)):
        assert (p * q)(x) == p(x) * q(x)


@given(coeff_lists, coeff_lists)
def test_divmod_identity(a, b):
    p, d = RationalPolynomial(a), RationalPolynomial(b)
    if d.is_zero():
        return
    q, r = divmod(p, d)
    assert q * d + r == p
    assert r.degree < d.degree


@given(coeff_lists)
def test_json_round_trip(a):
    p = RationalPolynomial(a, "msq")
    assert RationalPolynomial.from_json(p.to_json()) == p


@given(coeff_lists)
def test_content_reconstructs(a):
    p = RationalPolynomial(a)
    content, ints = p.content()
    assert RationalPolynomial(ints) * content == p
