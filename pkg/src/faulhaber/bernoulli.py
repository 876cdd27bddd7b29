"""Bernoulli numbers, Bernoulli polynomials and the generalized ``B_z(x)``.

Convention: ``B_1 = -1/2``, so that
``sum_{k<=n} k^m = (B_{m+1}(n+1) - B_{m+1}(0)) / (m+1)``.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exactnum import as_rational, binomial, int_binomial
from .polyring import LadderSeries, Poly

__all__ = [
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "generalized_bernoulli",
    "generalized_bernoulli_shifted",
]

_cache: list[Fraction] = [Fraction(1)]
_lock = threading.Lock()


def _extend(m: int) -> None:
    with _lock:
        while len(_cache) <= m:
            j = len(_cache)
            acc = sum(int_binomial(j + 1, k) * _cache[k] for k in range(j))
            _cache.append(-acc / (j + 1))


def bernoulli_number(m: int) -> Fraction:
    if m < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if m >= len(_cache):
        _extend(m)
    return _cache[m]


def bernoulli_numbers(m: int) -> list[Fraction]:
    """``[B_0, ..., B_m]``."""
    bernoulli_number(m)
    return _cache[: m + 1]


def bernoulli_polynomial(m: int, var: str = "x") -> Poly:
    """``B_m(x) = sum_k C(m, k) B_k x^(m-k)``."""
    bs = bernoulli_numbers(m)
    return Poly([int_binomial(m, m - j) * bs[m - j] for j in range(m + 1)], var)


def generalized_bernoulli(z, p: int, var: str = "x") -> LadderSeries:
    """Formal ``x^z * sum_{k<=p} C(z, k) B_k x^(-k)``.

    Returned on the half-step ladder with base exponent ``z``; the odd
    ladder slots are zero. For a nonnegative integer ``z <= p`` this is
    exactly the Bernoulli polynomial read from the top degree down.
    """
    if p < 0:
        raise ValueError("truncation order must be nonnegative")
    z = as_rational(z)
    bs = bernoulli_numbers(p)
    coeffs = [binomial(z, k) * bs[k] for k in range(p + 1)]
    exact = z.denominator == 1 and 0 <= z <= p
    return LadderSeries.from_integer_steps(z, coeffs, None if exact else p, var)


def generalized_bernoulli_shifted(z, p: int, var: str = "x") -> LadderSeries:
    """``B_z(x + 1)`` re-expanded in descending powers of ``x``.

    Expanding ``(x+1)^(z-k)`` binomially collapses the double sum to
    ``sum_t C(z, t) B_t(1) x^(z-t)``, and ``B_t(1)`` differs from ``B_t``
    only at ``t = 1``.
    """
    if p < 0:
        raise ValueError("truncation order must be nonnegative")
    z = as_rational(z)
    bs = list(bernoulli_numbers(p))
    if p >= 1:
        bs[1] = -bs[1]
    coeffs = [binomial(z, t) * bs[t] for t in range(p + 1)]
    exact = z.denominator == 1 and 0 <= z <= p
    return LadderSeries.from_integer_steps(z, coeffs, None if exact else p, var)
