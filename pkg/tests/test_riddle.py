from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from faulhaber.riddle import (ALPHABET, letter, minimal_2k_scaling, sigma9_n8_coeffs,
                              sigma_n25_leading, solve_riddle)

F = Fraction


def test_solution():
    rep = solve_riddle()
    assert rep.x[:4] == [9, 5, 18, 20]
    assert rep.letters[:4] == ["I", "E", "S", "U"]
    assert rep.name == "IESUS"
    assert not rep.integral[4]
    assert rep.constant("D") == 1092 and rep.constant("A26") == 42
    assert rep.d == sum(rep.a)


def test_scale_one():
    rep = solve_riddle(1)
    assert rep.integral == [False, True, False, False, False]
    assert rep.x[1] == 5
    assert rep.name == ""


def test_alternate_x5():
    rep = solve_riddle(alt_x5=True)
    assert rep.alt_x5 == F(1546967, 49861)
    assert rep.alt_x5.denominator != 1


def test_normalizations():
    a, d = sigma9_n8_coeffs()
    assert len(a) == 17 and a[-1] == 2 and d == 17643225600
    assert sigma_n25_leading() == (42, 1092)


def test_scalings_are_minimal():
    rep = solve_riddle()
    assert rep.scalings == {"b": 115, "c": 180, "d": 2275, "e": 273}
    for name, ints in rep.lists.items():
        assert all(x % 2 ** k == 0 for k, x in enumerate(ints))
        assert all(x > 0 for x in ints)


@given(st.lists(st.fractions(max_denominator=50).filter(bool), min_size=1, max_size=6))
def test_minimal_scaling_property(coeffs):
    t, scaled = minimal_2k_scaling(coeffs)
    assert t > 0
    assert all(abs(v) % 2 ** k == 0 for k, v in enumerate(scaled))
    # no smaller positive multiplier works: the reduced values are coprime integers
    reduced = [F(v, 2 ** k) for k, v in enumerate(scaled)]
    assert all(r.denominator == 1 for r in reduced)
    from math import gcd
    g = 0
    for r in reduced:
        g = gcd(g, int(r))
    assert g == 1


def test_errors_and_letters():
    with pytest.raises(ValueError):
        minimal_2k_scaling([0, 0])
    assert len(ALPHABET) == 23 and "J" not in ALPHABET
    assert letter(F(1)) == "A" and letter(F(23)) == "Z"
    assert letter(F(24)) is None and letter(F(1, 2)) is None
