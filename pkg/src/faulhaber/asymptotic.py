"""Faulhaber-type asymptotic series for sums of rational powers.

With ``u = n^2 + n`` and ``w = (alpha + 1)/2``,

    sum_{k<=n} k^alpha - zeta(-alpha) ~ 1/(alpha+1) * sum_k A_k^(w) u^(w-k).

Everything here is exact except :func:`telescope_check`, which compares a
truncated series against a direct sum in high precision. The zeta constant
is never evaluated; differencing two values of ``n`` cancels it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .bernoulli import bernoulli_numbers, generalized_bernoulli_shifted
from .exactnum import as_rational, binomial
from .polyring import LadderSeries

__all__ = [
    "ZETA_TAG",
    "DegenerateAlphaError",
    "PrecisionError",
    "a_general",
    "expansion_prefactor",
    "inverse_power_ladder",
    "bernoulli_ladder",
    "AsymptoticSeries",
    "build_series",
    "TelescopeReport",
    "telescope_check",
    "half_power_cancellation",
]

ZETA_TAG = "zeta(-alpha)"


class DegenerateAlphaError(ValueError):
    """``alpha = -1``: the sum grows like ``log n`` and has no such series."""


class PrecisionError(ArithmeticError):
    """The working precision could not resolve the requested comparison."""


def _prefactor_coeff(w: Fraction, j: int) -> Fraction:
    # (w/(w+j/2)) C(w+j/2, j) with the pole at w = -j/2 cancelled
    if j == 0:
        return Fraction(1)
    return w / j * binomial(w + Fraction(j, 2) - 1, j - 1)


def expansion_prefactor(w, order: int) -> LadderSeries:
    """``((sqrt(1+4u)+1) / (2 sqrt u))^(2w)`` through ``u^(-order/2)``."""
    w = as_rational(w)
    if order < 0:
        raise ValueError("order must be nonnegative")
    return LadderSeries(0, [_prefactor_coeff(w, j) for j in range(order + 1)], order)


def inverse_power_ladder(k: int, order: int) -> LadderSeries:
    """``((sqrt(1+4u)+1)/2)^(-k)`` as a ladder with base ``-k/2``."""
    coeffs = [Fraction(1)]
    for j in range(1, order + 1):
        coeffs.append(-Fraction(k, 2 * j) * binomial(Fraction(j - k, 2) - 1, j - 1))
    return LadderSeries(Fraction(-k, 2), coeffs, order)


def bernoulli_ladder(w, order: int) -> LadderSeries:
    """``sum_k C(2w, k) ((sqrt(1+4u)+1)/2)^(-k) B_k`` through ``u^(-order/2)``."""
    w = as_rational(w)
    bs = bernoulli_numbers(order)
    total = LadderSeries(0, [0] * (order + 1), order)
    for k in range(order + 1):
        c = binomial(2 * w, k) * bs[k]
        if c:
            total = total + inverse_power_ladder(k, order - k).scale(c)
    return total


def a_general(w, k: int) -> Fraction:
    """``A_k^(w)`` from Bernoulli numbers, valid for every rational ``w``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    w = as_rational(w)
    bs = bernoulli_numbers(2 * k)
    total = Fraction(0)
    for l in range(2 * k + 1):
        p = _prefactor_coeff(w, l)
        if not p:
            continue
        i = 2 * k - l
        inner = binomial(2 * w, i) * bs[i]
        for j in range(1, i):
            c = binomial(2 * w, j) * bs[j]
            if c:
                inner -= (c * Fraction(j, 2 * (i - j))
                          * binomial(Fraction(2 * k - l, 2) - j - 1, i - j - 1))
        total += p * inner
    return total


@dataclass(frozen=True)
class AsymptoticSeries:
    """``sum k^alpha - zeta(-alpha) ~ sum_(e, c) in terms c * u^e``."""

    alpha: Fraction
    w: Fraction
    terms: tuple[tuple[Fraction, Fraction], ...]
    exact: bool
    constant_tag: str = ZETA_TAG

    def coefficients(self) -> list[Fraction]:
        return [c for _, c in self.terms]

    def as_ladder(self) -> LadderSeries:
        cs = self.coefficients()
        return LadderSeries.from_integer_steps(self.w, cs, None if self.exact else len(cs) - 1)

    def evaluate(self, u, power=None, skip_constant: bool = False):
        power = power or (lambda x, e: x ** e)
        return sum(c * power(u, e) for e, c in self.terms
                   if c and not (skip_constant and e == 0))


def build_series(alpha, p: int) -> AsymptoticSeries:
    """The first ``p + 1`` terms; odd positive ``alpha`` gives the whole (finite) series."""
    alpha = as_rational(alpha)
    if alpha == -1:
        raise DegenerateAlphaError("alpha = -1 has no Faulhaber-type series")
    if p < 0:
        raise ValueError("p must be nonnegative")
    w = (alpha + 1) / 2
    exact = alpha.denominator == 1 and alpha > 0 and alpha % 2 == 1
    count = int(w) + 1 if exact else p + 1
    terms = [(w - k, a_general(w, k) / (alpha + 1)) for k in range(count)]
    if exact:
        # trailing vanishing terms are genuinely zero
        while len(terms) > 1 and terms[-1][1] == 0:
            terms.pop()
    return AsymptoticSeries(alpha, w, tuple(terms), exact)


# ---------------------------------------------------------------------------
# Numerical validation


@dataclass(frozen=True)
class TelescopeReport:
    alpha: Fraction
    p: int
    n1: int
    n2: int
    precision: int
    series_difference: object
    direct_difference: object
    error: object
    omitted_term: object
    euler_maclaurin_error: object
    exact: bool

    @property
    def within_bound(self) -> bool:
        return abs(self.error) <= self.omitted_term


def _direct_sum(alpha: Fraction, n1: int, n2: int, exact: bool):
    if exact:
        return sum(Fraction(k) ** int(alpha) for k in range(n1 + 1, n2 + 1))
    a = mpmath.mpf(alpha.numerator) / alpha.denominator
    return mpmath.fsum(mpmath.exp(a * mpmath.log(k)) for k in range(n1 + 1, n2 + 1))


def _mp_power(x, e: Fraction):
    return mpmath.exp(mpmath.mpf(e.numerator) / e.denominator * mpmath.log(x))


def _euler_maclaurin(alpha: Fraction, count: int, n: int):
    # (1/(alpha+1)) B_{alpha+1}(n+1) in descending powers of n, first `count` nonzero terms
    z = alpha + 1
    order = 2 * count + 2
    lad = generalized_bernoulli_shifted(z, order, "n")
    total = mpmath.mpf(0)
    used = 0
    for j, c in enumerate(lad.coeffs):
        if used == count:
            break
        if not c:
            continue
        e = lad.exponent(j)
        if e == 0:
            continue  # the constant is absorbed by zeta
        total += mpmath.mpf(c.numerator) / c.denominator * _mp_power(n, e)
        used += 1
    return total / (mpmath.mpf(z.numerator) / z.denominator)


def _telescope_once(alpha: Fraction, p: int, n1: int, n2: int, prec: int):
    series = build_series(alpha, p)
    nxt = build_series(alpha, p + 1)
    u1, u2 = n1 * n1 + n1, n2 * n2 + n2
    integral = all(e.denominator == 1 for e, _ in nxt.terms) and alpha.denominator == 1
    if series.exact and integral:
        diff = (series.evaluate(Fraction(u2), skip_constant=True)
                - series.evaluate(Fraction(u1), skip_constant=True))
        direct = _direct_sum(alpha, n1, n2, True)
        return diff, direct, diff - direct, Fraction(0), None, True
    with mpmath.workprec(prec):
        def power(x, e):
            return _mp_power(mpmath.mpf(x), e)

        def value(u):
            return sum(mpmath.mpf(c.numerator) / c.denominator * power(u, e)
                       for e, c in series.terms if c and e != 0)

        diff = value(u2) - value(u1)
        direct = _direct_sum(alpha, n1, n2, False)
        err = diff - direct
        if series.exact or len(nxt.terms) <= len(series.terms):
            omitted = mpmath.mpf(0)
        else:
            e, c = nxt.terms[len(series.terms)]
            mag = max(power(u1, e), power(u2, e))
            omitted = abs(mpmath.mpf(c.numerator) / c.denominator) * mag
        em = (_euler_maclaurin(alpha, len(series.terms), n2)
              - _euler_maclaurin(alpha, len(series.terms), n1)) - direct
        return diff, direct, err, omitted, em, False


def telescope_check(alpha, p: int, n1: int, n2: int, precision: int = 200) -> TelescopeReport:
    """Compare ``S(n2) - S(n1)`` for the truncated series with the direct sum.

    Integer exponents are handled exactly. Otherwise the comparison runs at
    ``precision`` bits and again at ``precision + 64``; if the two disagree
    by more than half the working precision can justify, a
    :class:`PrecisionError` is raised instead of returning a rounded answer.
    """
    alpha = as_rational(alpha)
    if not (n2 > n1 >= 10):
        raise ValueError("need n2 > n1 >= 10")
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    diff, direct, err, omitted, em, exact = _telescope_once(alpha, p, n1, n2, precision)
    if not exact:
        with mpmath.workprec(precision + 64):
            _, direct_hi, err_hi, _, _, _ = _telescope_once(alpha, p, n1, n2, precision + 64)
            noise = abs(err_hi - err)
            scale = max(abs(direct_hi), mpmath.mpf(1))
            if noise > scale * mpmath.mpf(2) ** (-(precision // 2)):
                raise PrecisionError(
                    f"{precision}-bit evaluation disagrees with {precision + 64}-bit "
                    f"evaluation by {mpmath.nstr(noise, 5)}")
    return TelescopeReport(alpha, p, n1, n2, precision, diff, direct, err, omitted, em, exact)


def half_power_cancellation(wlist, order: int) -> bool:
    """Odd half-powers vanish in the product behind the series, for each ``w``.

    Also checks that the even coefficients are the ``A_k^(w)`` of
    :func:`a_general`.
    """
    for w in wlist:
        w = as_rational(w)
        prod = expansion_prefactor(w, order) * bernoulli_ladder(w, order)
        if any(prod.odd_coefficients()):
            return False
        if prod.even_coefficients() != [a_general(w, k) for k in range(order // 2 + 1)]:
            return False
    return True
