"""Exact integers and rationals.

Python's ``int`` is already an unbounded integer and ``fractions.Fraction``
keeps a canonical reduced form with a positive denominator, so both are
used directly. This module adds the handful of combinatorial helpers the
rest of the package needs and the ``"p/q"`` text format.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "parse_rational",
    "format_rational",
    "factorial",
    "binomial",
    "rational_binomial",
    "int_binomial",
    "falling_factorial",
]


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; whitespace around the parts is ignored."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    num, sep, den = text.partition("/")
    try:
        p = int(num.strip())
        q = int(den.strip()) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational literal {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def factorial(k: int) -> int:
    if k < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(k)


def int_binomial(n: int, k: int) -> int:
    """Binomial coefficient for integer ``n`` of either sign; zero for ``k < 0``."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # C(-n, k) = (-1)^k C(n+k-1, k)
    return (-1) ** k * math.comb(-n + k - 1, k)


def falling_factorial(x, k: int) -> Fraction:
    x = as_rational(x)
    out = Fraction(1)
    for i in range(k):
        out *= x - i
    return out


def binomial(x, k: int) -> Fraction:
    """``x(x-1)...(x-k+1)/k!`` for rational ``x``; zero when ``k < 0``."""
    if k < 0:
        return Fraction(0)
    x = as_rational(x)
    if x.denominator == 1:
        return Fraction(int_binomial(x.numerator, k))
    return falling_factorial(x, k) / factorial(k)


rational_binomial = binomial
