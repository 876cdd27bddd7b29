from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from faulhaber.bernoulli import bernoulli_number
from faulhaber.exactnum import int_binomial, rational_binomial
from faulhaber.faulcoeff import (PivotError, StaircaseTooLarge, T1, a_by_determinant,
                                 a_by_jacobi, a_by_recurrence, a_explicit, a_symbolic,
                                 closed_form_check, determinant, determinant_D,
                                 gf_check_faulhaber, gf_faulhaber_coefficients,
                                 staircase_count)
from faulhaber.polyring import Poly
from conftest import rationals

F = Fraction


def test_recurrence_examples():
    assert a_by_recurrence(4, 4).entries == (1, F(-4, 3), F(2, 3), 0, F(-1, 30))
    assert a_by_recurrence(3, 1).entries == (1, F(-1, 2))
    for k, v in enumerate(a_by_recurrence(F(3, 2), 8)):
        assert v == rational_binomial(F(1, 2), k) / 4 ** k
    with pytest.raises(PivotError):
        a_by_recurrence(2, 2, special_values=False)


def test_symbolic_examples():
    w = Poly.gen("w")
    assert a_symbolic(0) == 1
    assert a_symbolic(1) == -(w * (w - 2)).scale(F(1, 6))
    assert a_symbolic(2) == (w * (w - 1) * (w - 3) * (7 * w - 8)).scale(F(1, 360))


@pytest.mark.parametrize("k", range(1, 5))
def test_symbolic_satisfies_jacobi(k):
    w = Poly.gen("w")
    a, prev = a_symbolic(k), a_symbolic(k - 1)
    lhs = (2 * w - 2 * k) * (2 * w - 2 * k - 1) * a + (w - k + 1) * (w - k) * prev
    assert lhs == (2 * w * (2 * w - 1)) * a.compose(w - 1)


@pytest.mark.parametrize("m", range(1, 11))
def test_special_values(m):
    assert a_by_jacobi(m, m)[m] == bernoulli_number(2 * m)
    assert 2 * a_by_jacobi(m + 1, m)[m - 1] == (2 * m + 2) * (2 * m + 1) * a_by_jacobi(m, m)[m]
    if m >= 2:
        assert a_explicit(m, m - 1) == 0
        assert a_explicit(m, m - 2) == int_binomial(2 * m, 2) * bernoulli_number(2 * m - 2)
    if m >= 3:
        assert a_explicit(m, m - 3) == -2 * a_explicit(m, m - 2)
    if m >= 4:
        assert a_explicit(m, m - 4) == (int_binomial(2 * m, 4) * bernoulli_number(2 * m - 4)
                                        + 5 * int_binomial(2 * m, 2) * bernoulli_number(2 * m - 2))
    with pytest.raises(ValueError):
        a_explicit(m, m)


@given(rationals(200, 30), st.integers(0, 5))
def test_routes_agree_at_rational_w(w, k):
    sym = a_symbolic(k)(w)
    assert a_by_recurrence(w, k)[k] == sym
    assert a_by_jacobi(w, k)[k] == sym
    if not (w.denominator == 1 and 1 <= w <= k):
        assert a_by_determinant(w, k) == sym


def test_jacobi_base_argument():
    base = a_by_recurrence(F(1, 3), 5)
    assert a_by_jacobi(F(10, 3), 5, base).entries == a_by_recurrence(F(10, 3), 5).entries
    with pytest.raises(ValueError):
        a_by_jacobi(F(1, 2), 5, base)


def test_determinant():
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[2, 4], [1, 2]]) == 0
    assert determinant([]) == 1
    for x in (F(7, 2), F(-3), F(11)):
        assert determinant_D(x, 1) == rational_binomial(x, 3)
    assert a_by_determinant(5, 2) == a_by_recurrence(5, 2)[2]
    with pytest.raises(PivotError):
        a_by_determinant(2, 3)
    with pytest.raises(ValueError):
        determinant([[1, 2]])


def test_staircase():
    assert staircase_count(3, 1) == 1
    assert staircase_count(4, 1) == 4 == determinant_D(4, 1)
    # w = m + 1, k = m - 1 interprets B_2m
    for m in range(2, 5):
        assert staircase_count(m + 1, m - 1) == determinant_D(m + 1, m - 1)
    with pytest.raises(StaircaseTooLarge):
        staircase_count(8, 4, max_nodes=100)
    with pytest.raises(ValueError):
        staircase_count(3, 3)


def test_sign_pattern():
    for m in range(1, 11):
        a = a_by_recurrence(m, m)
        assert all((-1) ** k * a[k] >= 0 for k in range(m))
        # the last entry is B_2m, whose sign alternates the other way
        assert (-1) ** m * a[m] < 0


def test_generating_functions():
    g = gf_faulhaber_coefficients(2)
    assert g[1] == Poly([F(1, 6), 1], "u")
    assert g[2] == Poly([F(-1, 30), 0, 1], "u")
    assert gf_check_faulhaber(6)
    assert all(closed_form_check(m) for m in range(1, 11))
    assert T1(3) == 14
