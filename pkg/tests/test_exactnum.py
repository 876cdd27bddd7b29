from fractions import Fraction
from math import comb, gcd

import pytest
from hypothesis import given, strategies as st

from faulhaber.exactnum import (as_rational, factorial, format_rational, int_binomial,
                                parse_rational, rational_binomial)
from conftest import rationals

big = st.integers(-(2 ** 256), 2 ** 256)


def test_spec_examples():
    assert rational_binomial(4, 2) == 6
    assert rational_binomial(Fraction(1, 2), 1) == Fraction(1, 2)
    assert rational_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert rational_binomial(Fraction(7, 3), 0) == 1
    assert factorial(0) == 1
    assert factorial(7) == 5040
    assert factorial(17) // 120 == 2964061900800


@given(big, big.filter(bool), big, big.filter(bool))
def test_canonical_form(a, b, c, d):
    x = Fraction(a, b) + Fraction(c, d)
    assert x.denominator > 0
    assert gcd(x.numerator, x.denominator) == 1
    if x == 0:
        assert (x.numerator, x.denominator) == (0, 1)


@given(st.integers(0, 60), st.integers(0, 60))
def test_integer_binomial_agrees(n, k):
    expected = comb(n, k)
    assert rational_binomial(n, k) == expected
    assert int_binomial(n, k) == expected


@given(st.integers(-30, 30), st.integers(0, 20))
def test_negative_upper(n, k):
    assert int_binomial(n, k) == rational_binomial(n, k)


@given(rationals(), st.integers(0, 25))
def test_binomial_step(x, k):
    assert rational_binomial(x, k + 1) == rational_binomial(x, k) * (x - k) / (k + 1)


@given(rationals())
def test_format_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_rational("1/2/3")
    with pytest.raises(ValueError):
        parse_rational("")
    with pytest.raises(ZeroDivisionError):
        parse_rational("3/0")
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational(" -6 / 4 ") == Fraction(-3, 2)
    assert format_rational(Fraction(4, 2)) == "2"
