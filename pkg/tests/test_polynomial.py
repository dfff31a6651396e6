import pytest
from hypothesis import given, strategies as st

from partition_gini.polynomial import IntPolynomial

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)


def test_canonical_form():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial().degree is None
    assert IntPolynomial([0, 0]).is_zero()


def test_from_exponents():
    p = IntPolynomial.from_exponents([2, 1, 2])
    assert p.coeffs == (0, 1, 2)
    assert p.pretty() == "2t^2 + t"


def test_pretty_and_json():
    p = IntPolynomial([0, 1, 1])
    assert str(p) == "t^2 + t"
    assert p.to_json() == {"coeffs": [0, 1, 1]}
    assert IntPolynomial([3, -1]).pretty("q") == "-q + 3"
    assert IntPolynomial().pretty() == "0"


def test_monic_and_leading():
    p = IntPolynomial([5, 0, 1])
    assert p.is_monic() and p.leading_coefficient == 1
    assert not IntPolynomial([1, 2]).is_monic()


def test_evaluate():
    assert IntPolynomial([1, 1, 1])(2) == 7
    assert IntPolynomial([0, 1, 1])(1) == 2


def test_equality_with_int():
    assert IntPolynomial([4]) == 4
    assert IntPolynomial() == 0


def test_exact_div_failure():
    with pytest.raises(ArithmeticError):
        IntPolynomial([1, 0, 1]).exact_div(IntPolynomial([-1, 1]))


@given(coeff_lists, coeff_lists)
def test_ring_laws(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p
    assert (p * q)(3) == p(3) * q(3)


@given(coeff_lists, st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_divmod_monic(a, b):
    divisor = IntPolynomial(b + [1])
    p = IntPolynomial(a)
    quot, rem = p.divmod(divisor)
    assert quot * divisor + rem == p
    assert rem.is_zero() or rem.degree < divisor.degree


@given(coeff_lists, st.integers(0, 4))
def test_power(a, e):
    p = IntPolynomial(a)
    expected = IntPolynomial([1])
    for _ in range(e):
        expected = expected * p
    assert p ** e == expected
