from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from faulhaber.polyring import (LadderSeries, Poly, VariableMismatchError, antidifference,
                                ladder_multiply, nabla, substitute_faulhaber)
from faulhaber.asymptotic import expansion_prefactor
from faulhaber.reflect import is_anti_reflective, is_reflective
from conftest import polys, rationals

n = Poly.gen("n")


def test_basic_examples():
    assert nabla(n ** 2) == 2 * n - 1
    assert nabla(Poly([5])).is_zero()
    assert antidifference(Poly([1])) == n
    assert antidifference(n) == Poly([0, Fraction(1, 2), Fraction(1, 2)])
    assert antidifference(n ** 2) == Poly([0, 1, 3, 2]).scale(Fraction(1, 6))
    assert antidifference(Poly(())).is_zero()
    N = Poly.gen("N")
    assert substitute_faulhaber(N ** 2, 1) == Poly([0, 0, 1, 2, 1]).scale(Fraction(1, 4))
    assert substitute_faulhaber(N, 2) == Poly([0, 2, 1]).scale(Fraction(1, 2))
    assert substitute_faulhaber(Poly([7], "N"), 3) == 7
    assert Poly([0, 1, 1]).scale(Fraction(1, 2))(4) == 10
    assert Poly([3, 1]) * 1 == Poly([3, 1])


def test_variable_tags():
    with pytest.raises(VariableMismatchError):
        Poly.gen("n") + Poly.gen("N")
    assert str(Poly([0, -1, 2])) == "2*n^2 - n"


def test_exact_division():
    p = (n + 1) * (n - 3) ** 2
    assert p / (n - 3) == (n + 1) * (n - 3)
    with pytest.raises(ArithmeticError):
        p / (n + 7)


@given(polys())
def test_inverse_pair(p):
    assert nabla(antidifference(p)) == p
    assert antidifference(p)(0) == 0


@given(polys(10), st.integers(1, 50))
def test_antidifference_is_literal_sum(p, m):
    assert antidifference(p)(m) == sum(p(k) for k in range(1, m + 1))


@given(polys(4), polys(3), rationals())
def test_compose(p, q, x):
    assert p.compose(q)(x) == p(q(x))


@given(polys(5), polys(5))
def test_divmod(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(st.integers(0, 3), polys(4, "x"), st.booleans())
def test_lemma1(r, h, anti):
    f = h.compose(Poly([0, r, 1], "n"))
    if anti:
        f = Poly([Fraction(r, 2), 1]) * f
    if r == 0:
        return
    if anti:
        assert is_reflective(nabla(f), r - 1)
    else:
        assert is_anti_reflective(nabla(f), r - 1)


def test_ladder_examples():
    a = LadderSeries(0, [1, 1], None)
    b = LadderSeries(0, [1, -1], None)
    prod = ladder_multiply(a, b)
    assert prod.coeffs == (1, 0, -1)
    s = LadderSeries(Fraction(1, 3), [1, 2, 3], 2)
    assert (s * LadderSeries.one()).coeffs == s.coeffs
    p1 = expansion_prefactor(1, 6)
    assert (p1 * p1).coeffs == expansion_prefactor(2, 6).coeffs
    # truncation order follows the shorter factor
    assert (s * p1).order == 2
    with pytest.raises(ValueError):
        s.coefficient(5)
    assert LadderSeries(0, [1], None).coefficient(9) == 0
