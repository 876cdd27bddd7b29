from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from faulhaber.polyring import Poly
from faulhaber.powersum import power_sum
from faulhaber.reflect import (ANY, AlternatingCorrection, TabulatedFunction, WindowError,
                               a_expansion, a_reconstruct, a_to_b, ab_convert, b_basis,
                               b_expansion, b_to_a, decompose, is_anti_reflective,
                               is_reflective, sigma_constant)
from conftest import polys

F = Fraction
rs = st.integers(0, 3)


def sigma(f: Poly, c) -> Poly:
    # C + f(1) + ... + f(n)
    from faulhaber.polyring import antidifference
    return antidifference(f) + c


@given(polys(8), rs, rs)
def test_decomposition(f, r, s):
    d = decompose(f, r, s)
    assert d.g + d.h == f
    assert is_reflective(d.g, r)
    assert is_anti_reflective(d.h, s)


@given(polys(8), rs)
def test_lemma_products(f, r):
    refl = decompose(f, r, r).g
    anti = decompose(f, r, r).h
    assert is_reflective(refl * refl, r)
    assert is_reflective(anti * anti, r)
    assert is_anti_reflective(refl * anti, r)


@given(polys(8), rs)
def test_lemma_sums(f, r):
    d = decompose(f, r, r)
    c = sigma_constant(d.g, r)
    assert is_anti_reflective(sigma(d.g, c), r + 1)
    if not d.h.is_zero():
        assert sigma_constant(d.h, r) is ANY
        assert is_reflective(sigma(d.h, 0), r + 1)
        assert is_reflective(sigma(d.h, 7), r + 1)


def test_sigma_constant_examples():
    assert sigma_constant(Poly([1]), 0) == F(1, 2)
    assert sigma_constant(Poly([0, 1, 1]), 1) == 0
    assert sigma_constant(Poly.gen("n"), 0) is ANY
    with pytest.raises(ValueError):
        sigma_constant(Poly([0, 0, 0, 1, 1]), 0)


def test_decompose_example_and_anchor():
    d = decompose(Poly.monomial(2), 1, 1)
    assert d.g == Poly([F(1, 2), 1, 1]) and d.h == Poly([-F(1, 2), -1])
    f = Poly([3, 1, 4, 1, 5])
    pinned = decompose(f, 0, 1, anchor=("h", 2, 10))
    assert not pinned.unique
    assert isinstance(pinned.h, AlternatingCorrection)
    assert pinned.h(2) == 10
    for x in range(-6, 7):
        assert pinned.g(x) + pinned.h(x) == f(x)
    assert is_reflective(pinned.g, 0) and is_anti_reflective(pinned.h, 1)


@pytest.mark.parametrize("r,s", [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 1), (3, 2)])
def test_table_decompose(r, s):
    f = Poly([2, -1, F(1, 3), 5, 0, 1])
    table = TabulatedFunction.from_function(f, -10, 10)
    d = decompose(table, r, s)
    assert is_reflective(d.g, r) and is_anti_reflective(d.h, s)
    for x, v in d.h.items():
        assert d.g(x) + v == f(x)
    if s % 2 == 0 or r % 2 == 1:
        assert d.unique
    else:
        assert d.h(0) == 0


def test_table_errors():
    table = TabulatedFunction.from_function(lambda x: x, -3, 3)
    with pytest.raises(ValueError):
        decompose(table, 0, 3)
    with pytest.raises(WindowError):
        decompose(table, 0, 1, anchor=("h", 9, 0))
    with pytest.raises(WindowError):
        a_expansion(table, 9)
    with pytest.raises(WindowError):
        decompose(TabulatedFunction.from_function(lambda x: x, 5, 8), 0, 0)


def test_a_b_examples():
    assert a_expansion(Poly.monomial(3), 3) == [0, 1, 0, 6]
    assert a_expansion(Poly.monomial(5), 5) == [0, 1, 0, 30, 0, 120]
    one = Poly([1])
    assert b_expansion(one, 10) == [(-1) ** (k // 2) * 2 ** k for k in range(11)]
    b = b_expansion(power_sum(2, 1), 6)
    assert b == [0, 0, 1, 0, 0, 0, 0]


@given(polys(8))
def test_expansion_round_trips(f):
    a = a_expansion(f, 9)
    assert a_reconstruct(a) == f
    b = a_to_b(a)
    assert b_to_a(b) == a
    assert ab_convert(ab_convert(a), "b_to_a") == a
    # the b-series is infinite in general but finite at each n
    b = b_expansion(f, 40)
    for n in range(-8, 9):
        assert sum(c * b_basis(k)(n) for k, c in enumerate(b)) == f(n)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=9))
def test_integrality(vals):
    # integer-valued polynomials have integer a_k and b_k
    a = [F(v) for v in vals]
    f = a_reconstruct(a)
    for x in range(-5, 6):
        assert f(x).denominator == 1
    assert all(c.denominator == 1 for c in b_expansion(f, len(a) - 1))


def test_table_matches_polynomial():
    f = Poly.monomial(5)
    table = TabulatedFunction.from_function(f, -3, 3)
    assert a_expansion(table, 5) == a_expansion(f, 5)
    with pytest.raises(ValueError):
        ab_convert([1], "sideways")
