from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from faulhaber.asymptotic import (DegenerateAlphaError, PrecisionError, a_general,
                                  build_series, expansion_prefactor,
                                  half_power_cancellation, inverse_power_ladder,
                                  telescope_check)
from faulhaber.faulcoeff import a_by_recurrence
from faulhaber.powersum import to_faulhaber_form
from conftest import rationals

F = Fraction


def test_alpha_minus_two():
    s = build_series(-2, 4)
    assert s.coefficients() == [-1, F(5, 24), F(-161, 1920), F(401, 7168), F(-32021, 491520)]
    assert [e for e, _ in s.terms] == [F(-1, 2), F(-3, 2), F(-5, 2), F(-7, 2), F(-9, 2)]
    assert not s.exact


def test_alpha_third():
    assert build_series(F(-1, 3), 2).coefficients() == [F(3, 2), F(5, 36), F(-17, 1215)]
    assert build_series(F(1, 3), 0).coefficients() == [F(3, 4)]


@pytest.mark.parametrize("m", range(1, 9))
def test_odd_exact(m):
    s = build_series(2 * m - 1, 50)
    assert s.exact
    faul = to_faulhaber_form(2 * m - 1, 1).pure_N()
    for e, c in s.terms:
        if e:  # the constant term is -zeta(1 - 2m), absent from the sum itself
            assert c == faul.coeff(int(e)) / 2 ** int(e)


def test_degenerate():
    with pytest.raises(DegenerateAlphaError):
        build_series(-1, 3)
    with pytest.raises(ValueError):
        build_series(2, -1)


@given(rationals(60, 12), st.integers(0, 5))
def test_general_matches_recurrence(w, k):
    assert a_general(w, k) == a_by_recurrence(w, k)[k]


def test_ladders():
    assert list(expansion_prefactor(F(1, 2), 3).coeffs[:2]) == [1, F(1, 2)]
    # ((sqrt(1+4u)+1)/2)^(-1) = sqrt(u) - 1/2 + ... as a ladder from u^(-1/2)
    lad = inverse_power_ladder(1, 2)
    assert lad.coeffs[0] == 1 and lad.coeffs[1] == -F(1, 2)
    assert half_power_cancellation([F(1, 3), F(3, 2), F(-1, 2), F(5, 2)], 8)


@pytest.mark.parametrize("alpha", [F(-1, 3), F(1, 3), F(-2), F(1, 2), F(5, 2)])
def test_telescope(alpha):
    rep = telescope_check(alpha, 4, 50, 100)
    assert rep.within_bound
    assert rep.omitted_term > 0 and rep.precision == 200


def test_telescope_exact():
    rep = telescope_check(5, 2, 10, 20)
    assert rep.exact and rep.error == 0


def test_telescope_errors():
    with pytest.raises(ValueError):
        telescope_check(F(1, 3), 2, 5, 100)
    with pytest.raises(ValueError):
        telescope_check(F(1, 3), 2, 50, 100, precision=20)
    assert issubclass(PrecisionError, ArithmeticError)
