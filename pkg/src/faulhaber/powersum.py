"""Repeated power sums and their Faulhaber forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactnum import as_rational
from .polyring import Poly, antidifference, substitute_faulhaber

__all__ = [
    "power_sum",
    "brute_force_sum",
    "FaulhaberForm",
    "FaulhaberDivisionError",
    "to_faulhaber_form",
    "reflective_quotient",
    "OddReduction",
    "derive_odd_reduction",
    "odd_sum_by_reduction",
    "odd_to_even_coeffs",
    "even_coeffs_to_odd",
    "even_odd_dual",
    "even_sum_from_coeffs",
    "scaled_even_sum",
]

N = Poly.gen("N")


class FaulhaberDivisionError(ArithmeticError):
    """An exact division that the theory guarantees came out inexact."""


@lru_cache(maxsize=None)
def power_sum(m: int, r: int = 1) -> Poly:
    """The ``r``-fold repeated sum of ``k^m`` as a polynomial in ``n``.

    ``r = 0`` gives ``n^m`` itself.
    """
    if m < 1:
        raise ValueError("power must be a positive integer")
    if r < 0:
        raise ValueError("repetition count must be nonnegative")
    if r == 0:
        return Poly.monomial(m)
    return antidifference(power_sum(m, r - 1))


def brute_force_sum(m: int, r: int, n: int) -> int:
    """Literal nested summation, used as an oracle."""
    values = [k ** m for k in range(n + 1)]
    values[0] = 0
    for _ in range(r):
        acc = 0
        for i in range(n + 1):
            acc += values[i]
            values[i] = acc
    return values[n]


def reflective_quotient(q: Poly, r: int) -> Poly:
    """Write an ``r``-reflective polynomial ``q(n)`` as ``h(n(n+r))``.

    Repeated division by ``n(n+r)``; each remainder must be constant.
    """
    x = Poly([0, r, 1], q.var)
    digits = []
    while not q.is_zero():
        q, rem = q.divmod(x)
        if rem.degree > 0:
            raise FaulhaberDivisionError(f"polynomial is not {r}-reflective")
        digits.append(rem.coeff(0))
    return Poly(digits, "x")


@dataclass(frozen=True)
class FaulhaberForm:
    """``power_sum(m, r) == g(N_r) * power_sum(1 or 2, r)``.

    The factor is ``power_sum(1, r)`` for odd ``m`` and ``power_sum(2, r)``
    for even ``m``; ``g`` is a polynomial in ``N``.
    """

    r: int
    m: int
    g: Poly
    factor_power: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "factor_power", 1 if self.m % 2 else 2)

    @property
    def factor(self) -> Poly:
        return power_sum(self.factor_power, self.r)

    def to_n_polynomial(self) -> Poly:
        return substitute_faulhaber(self.g, self.r) * self.factor

    def pure_N(self) -> Poly:
        """``g(N) * N``: the whole sum as a polynomial in ``N`` (r = 1, odd m)."""
        if self.r != 1 or self.m % 2 == 0:
            raise ValueError("only odd sums with r = 1 are polynomials in N")
        return self.g * N


def to_faulhaber_form(m: int, r: int = 1) -> FaulhaberForm:
    if m < 1 or r < 1:
        raise ValueError("Faulhaber form needs m >= 1 and r >= 1")
    factor = power_sum(1 if m % 2 else 2, r)
    q, rem = power_sum(m, r).divmod(factor)
    if not rem.is_zero():
        raise FaulhaberDivisionError(f"sum^{r} n^{m} not divisible by its factor")
    h = reflective_quotient(q, r)
    # x = n(n+r) = 2N
    g = Poly([c * 2 ** i for i, c in enumerate(h.coeffs)], "N")
    return FaulhaberForm(r, m, g)


# ---------------------------------------------------------------------------
# Reduction of odd sums via n^m (n+1)^m


@dataclass(frozen=True)
class OddReduction:
    """``sum n^(2m-1) = leading N^m - sum_i lower[i] * sum n^i``.

    ``s_terms`` holds the coefficients of ``S(n)`` in
    ``2m sum n^(2m-1) = n^m (n+1)^m - S(n)``, keyed by odd exponent.
    """

    m: int
    leading: Fraction
    lower: dict[int, Fraction]
    s_terms: dict[int, int]


def derive_odd_reduction(m: int) -> OddReduction:
    if m < 2:
        raise ValueError("reduction starts at m = 2")
    n = Poly.gen("n")
    diff = (n ** m) * (n + 1) ** m - ((n - 1) ** m) * (n ** m)
    top = 2 * m - 1
    if diff.coeff(top) != 2 * m or any(diff.coeff(i) for i in range(0, diff.degree + 1, 2)):
        raise AssertionError("unexpected shape of n^m (n+1)^m - (n-1)^m n^m")
    s_terms = {i: int(diff.coeff(i)) for i in range(top - 2, 0, -2) if diff.coeff(i)}
    lower = {i: Fraction(c, 2 * m) for i, c in s_terms.items()}
    return OddReduction(m, Fraction(2 ** m, 2 * m), lower, s_terms)


@lru_cache(maxsize=None)
def odd_sum_by_reduction(m: int) -> Poly:
    """``sum n^(2m-1)`` as a polynomial in ``N``, by the reduction above."""
    if m == 1:
        return N
    red = derive_odd_reduction(m)
    out = Poly.monomial(m, red.leading, "N")
    for i, c in red.lower.items():
        out = out - odd_sum_by_reduction((i + 1) // 2).scale(c)
    return out


# ---------------------------------------------------------------------------
# Even/odd duality


def odd_to_even_coeffs(odd: Poly) -> list[Fraction]:
    """From ``sum n^(2m+1) = sum_i a_i/(i+1) N^(i+1)`` recover ``[a_1..a_m]``."""
    if odd.var != "N":
        raise ValueError("expected a polynomial in N")
    if odd.coeff(0) or odd.coeff(1):
        raise ValueError("odd power sum must be divisible by N^2")
    return [odd.coeff(i + 1) * (i + 1) for i in range(1, odd.degree)]


def even_coeffs_to_odd(a: list) -> Poly:
    a = [as_rational(x) for x in a]
    return Poly([0, 0] + [c / (i + 2) for i, c in enumerate(a)], "N")


def even_sum_from_coeffs(a: list) -> Poly:
    """``(n + 1/2)/(2m+1) * (a_1 N + ... + a_m N^m)`` as a polynomial in ``n``."""
    m = len(a)
    inner = Poly([0] + [as_rational(x) for x in a], "N")
    return substitute_faulhaber(inner, 1) * Poly([Fraction(1, 2), 1]).scale(Fraction(1, 2 * m + 1))


def scaled_even_sum(m: int) -> Poly:
    """``S_2m = (2m+1) sum n^(2m) / (n + 1/2)`` as a polynomial in ``N``."""
    q = power_sum(2 * m, 1).scale(2 * m + 1) / Poly([Fraction(1, 2), 1])
    h = reflective_quotient(q, 1)
    return Poly([c * 2 ** i for i, c in enumerate(h.coeffs)], "N")


def even_odd_dual(m: int, direction: str = "odd_to_even"):
    """Two sums for the price of one.

    ``"odd_to_even"``: read ``[a_1..a_m]`` off ``sum n^(2m+1)``; the
    returned list satisfies ``sum n^(2m) == even_sum_from_coeffs(a)``.
    ``"even_to_odd"``: read the list off ``sum n^(2m)`` and return
    ``sum n^(2m+1)`` as a polynomial in ``N``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if direction == "odd_to_even":
        return odd_to_even_coeffs(to_faulhaber_form(2 * m + 1, 1).pure_N())
    if direction == "even_to_odd":
        s = scaled_even_sum(m)
        if s.coeff(0):
            raise ValueError("scaled even sum has a constant term")
        return even_coeffs_to_odd(list(s.coeffs[1:]))
    raise ValueError(f"unknown direction {direction!r}")
