from fractions import Fraction

import pytest

from faulhaber.centralfact import (basis_T, basis_U, central_factorial, central_factorial_row,
                                   even_cf_polynomial, even_cf_to_quotient, even_odd_cf_dual,
                                   even_powersum_cf, gf_check_central, odd_cf_polynomial,
                                   odd_cf_to_quotient, odd_powersum_cf,
                                   repeated_odd_cf_polynomial, stirling2, stirling_expansion,
                                   stirling_polynomials, u_expansion)
from faulhaber.polyring import Poly
from faulhaber.powersum import power_sum

F = Fraction


def test_rows():
    assert central_factorial_row(3) == (0, 1, 5, 1)
    assert central_factorial(4, 2) == 21
    with pytest.raises(ValueError):
        central_factorial(3, 0)
    with pytest.raises(ValueError):
        central_factorial(3, 4)


def test_bases():
    assert basis_T(0) == Poly([1, 2])
    assert basis_T(1) == power_sum(2)
    for k in range(1, 8):
        assert basis_T(k) - basis_T(k).compose(Poly([-1, 1])) == basis_U(k)
        assert basis_T(k)(0) == 0
    assert basis_U(1) == Poly.monomial(2)
    assert basis_U(2) * 12 + basis_U(1) == Poly.monomial(4)


@pytest.mark.parametrize("m", range(1, 8))
def test_odd(m):
    assert odd_cf_polynomial(odd_powersum_cf(m)) == power_sum(2 * m - 1)
    for r in range(0, 5):
        assert repeated_odd_cf_polynomial(m, r) == power_sum(2 * m - 1, r)


@pytest.mark.parametrize("m", range(1, 7))
def test_even(m):
    c = even_powersum_cf(m)
    assert even_cf_polynomial(c) == power_sum(2 * m)
    assert all(x.denominator == 1 for x in u_expansion(Poly.monomial(2 * m)))
    a = even_cf_to_quotient(c)
    assert even_odd_cf_dual(m, a) == odd_powersum_cf(m)
    assert odd_cf_to_quotient(m, odd_powersum_cf(m)) == a


def test_examples():
    assert odd_powersum_cf(3) == [1, 30, 120]
    assert u_expansion(Poly.monomial(6)) == [1, 60, 360]
    with pytest.raises(ValueError):
        u_expansion(Poly.monomial(3))
    with pytest.raises(ValueError):
        even_odd_cf_dual(2, [1])


def test_stirling():
    assert stirling2(7, 3) == 301
    assert stirling2(0, 0) == 1 and stirling2(5, 0) == 0 and stirling2(3, 5) == 0
    first, second = stirling_expansion(7)
    assert first == [1, 126, 1806, 8400, 16800, 15120, 5040]
    p, q = stirling_polynomials(7)
    assert p == q == power_sum(7)


def test_generating_function():
    assert gf_check_central(6)
