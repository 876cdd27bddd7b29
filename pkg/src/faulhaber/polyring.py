"""Dense univariate polynomials over the rationals, plus ladder series.

A :class:`Poly` carries a variable tag (``"n"``, ``"N"``, ``"u"``, ``"w"``,
``"x"`` and so on) so that a polynomial in ``N`` is never silently added to
one in ``n``. Coefficients are stored low degree first.

:class:`LadderSeries` holds truncated expansions in descending powers
``u**(base - j/2)``; every asymptotic expansion in this package lives on
that half-integer ladder.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Callable, Sequence

from .exactnum import as_rational, factorial, int_binomial

__all__ = [
    "Poly",
    "VariableMismatchError",
    "binomial_poly",
    "nabla",
    "antidifference",
    "substitute_faulhaber",
    "faulhaber_variable",
    "LadderSeries",
    "ladder_multiply",
    "series_mul",
    "series_inverse",
    "series_pow",
]


class VariableMismatchError(ValueError):
    """Raised when polynomials in different variables are combined."""


def _trim(coeffs) -> tuple[Fraction, ...]:
    coeffs = [as_rational(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence = (), var: str = "n"):
        object.__setattr__(self, "coeffs", _trim(coeffs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c, var: str = "n") -> Poly:
        return cls([c], var)

    @classmethod
    def gen(cls, var: str = "n") -> Poly:
        """The polynomial ``var`` itself."""
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "n") -> Poly:
        return cls([0] * k + [c], var)

    # -- basic properties ---------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def denominator(self) -> int:
        """Least common denominator of the coefficients."""
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // _gcd(d, c.denominator)
        return d

    def numerators(self) -> list[int]:
        """Integer coefficients over :meth:`denominator`, low degree first."""
        d = self.denominator()
        return [int(c * d) for c in self.coeffs]

    # -- ring operations ----------------------------------------------

    def _check(self, other: Poly) -> None:
        if self.var != other.var:
            raise VariableMismatchError(
                f"cannot combine polynomials in {self.var!r} and {other.var!r}")

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly([as_rational(other)], self.var)

    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = self._lift(other)
        return Poly([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)],
                    self.var)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out, self.var)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / as_rational(other))
        if isinstance(other, Poly):
            q, r = self.divmod(other)
            if not r.is_zero():
                raise ArithmeticError(f"{other} does not divide {self}")
            return q
        return NotImplemented

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly([1], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> Poly:
        c = as_rational(c)
        return Poly([c * a for a in self.coeffs], self.var)

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        """Euclidean division; the divisor must be nonzero."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c == 0:
                continue
            quot[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= c * b
        return Poly(quot, self.var), Poly(rem[:dq], self.var)

    # -- evaluation and substitution ----------------------------------

    def __call__(self, x):
        if isinstance(x, Poly):
            return self.compose(x)
        if isinstance(x, (int, str)):
            x = as_rational(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(acc, int):
            return Fraction(acc)
        return acc

    def evaluate(self, x):
        return self(x)

    def compose(self, inner: Poly) -> Poly:
        """``self(inner(t))`` as a polynomial in ``inner``'s variable."""
        acc = Poly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a) -> Poly:
        """``self(x + a)``."""
        return self.compose(Poly([a, 1], self.var))

    def reflect(self, r) -> Poly:
        """``self(-x - r)``."""
        return self.compose(Poly([-as_rational(r), -1], self.var))

    def with_var(self, var: str) -> Poly:
        return Poly(self.coeffs, var)

    def derivative(self) -> Poly:
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    # -- dunder plumbing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.degree <= 0 and self.coeff(0) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = self.var if k == 1 else f"{self.var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def binomial_poly(shift, k: int, var: str = "n") -> Poly:
    """``C(var + shift, k)`` as a polynomial of degree ``k``."""
    shift = as_rational(shift)
    out = Poly([1], var)
    for i in range(k):
        out = out * Poly([shift - i, 1], var)
    return out.scale(Fraction(1, factorial(k)))


def nabla(p: Poly) -> Poly:
    """Backward difference ``p(x) - p(x-1)``."""
    return p - p.shift(-1)


def antidifference(p: Poly) -> Poly:
    """The polynomial ``q`` with ``nabla(q) == p`` and ``q(0) == 0``.

    ``p`` is expanded in the binomial basis ``C(n, k)`` using forward
    differences at zero, and each ``C(n, k)`` is summed to
    ``C(n+1, k+1) - [k == 0]``.
    """
    if p.is_zero():
        return p
    d = p.degree
    values = [p(i) for i in range(d + 1)]
    out = Poly((), p.var)
    for k in range(d + 1):
        # k-th forward difference at 0
        ck = sum((-1) ** (k - i) * int_binomial(k, i) * values[i] for i in range(k + 1))
        if ck:
            out = out + binomial_poly(1, k + 1, p.var).scale(ck)
    return out - out(0)


def faulhaber_variable(r: int, var: str = "n") -> Poly:
    """``N_r = (n^2 + r n)/2`` as a polynomial in ``var``."""
    return Poly([0, Fraction(r, 2), Fraction(1, 2)], var)


def substitute_faulhaber(p: Poly, r: int, var: str = "n") -> Poly:
    """Replace ``N`` by ``(n^2 + r n)/2`` and expand."""
    return p.compose(faulhaber_variable(r, var))


# ---------------------------------------------------------------------------
# Ladder series


@dataclass(frozen=True)
class LadderSeries:
    """Truncated series ``sum_j coeffs[j] * u**(base - j/2)``.

    ``order`` is the last index whose coefficient is known; entries past it
    are unknown rather than zero. ``order=None`` marks an exact, finite
    expansion (every coefficient past ``coeffs`` is genuinely zero).
    """

    base: Fraction
    coeffs: tuple[Fraction, ...]
    order: int | None = None
    var: str = "u"

    def __post_init__(self):
        object.__setattr__(self, "base", as_rational(self.base))
        cs = [as_rational(c) for c in self.coeffs]
        if self.order is not None:
            if self.order < -1:
                raise ValueError("truncation order must be >= -1")
            cs = (cs + [Fraction(0)] * (self.order + 1))[: self.order + 1]
        else:
            while cs and cs[-1] == 0:
                cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls, var: str = "u") -> LadderSeries:
        return cls(Fraction(0), (Fraction(1),), None, var)

    @classmethod
    def from_integer_steps(cls, base, coeffs, order: int | None = None,
                           var: str = "u") -> LadderSeries:
        """Embed a series in ``u**(base - k)`` onto the half-step ladder."""
        spread = []
        for c in coeffs:
            spread.extend([c, 0])
        if spread:
            spread.pop()
        return cls(base, tuple(spread), None if order is None else 2 * order, var)

    def exponent(self, j: int) -> Fraction:
        return self.base - Fraction(j, 2)

    def coefficient(self, j: int) -> Fraction:
        if j < 0:
            raise IndexError(j)
        if j < len(self.coeffs):
            return self.coeffs[j]
        if self.order is None:
            return Fraction(0)
        raise ValueError(f"coefficient {j} lies past truncation order {self.order}")

    def terms(self):
        """(exponent, coefficient) pairs for the known nonzero terms."""
        return [(self.exponent(j), c) for j, c in enumerate(self.coeffs) if c]

    def odd_coefficients(self) -> list[Fraction]:
        return list(self.coeffs[1::2])

    def even_coefficients(self) -> list[Fraction]:
        return list(self.coeffs[0::2])

    def scale(self, c) -> LadderSeries:
        c = as_rational(c)
        return LadderSeries(self.base, tuple(c * a for a in self.coeffs), self.order, self.var)

    def _check(self, other: LadderSeries) -> None:
        if self.var != other.var:
            raise VariableMismatchError(f"ladder in {self.var!r} vs {other.var!r}")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LadderSeries):
            return ladder_multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other: LadderSeries) -> LadderSeries:
        self._check(other)
        hi = max(self.base, other.base)
        offsets = []
        for s in (self, other):
            off = (hi - s.base) * 2
            if off.denominator != 1:
                raise ValueError("series do not share a half-integer ladder")
            offsets.append(int(off))
        orders = [None if s.order is None else s.order + o
                  for s, o in zip((self, other), offsets)]
        known = [o for o in orders if o is not None]
        order = min(known) if known else None
        length = max(len(s.coeffs) + o for s, o in zip((self, other), offsets))
        if order is not None:
            length = order + 1
        out = [Fraction(0)] * length
        for s, o in zip((self, other), offsets):
            for j, c in enumerate(s.coeffs):
                if j + o < length:
                    out[j + o] += c
        return LadderSeries(hi, tuple(out), order, self.var)

    def __neg__(self) -> LadderSeries:
        return self.scale(-1)

    def __sub__(self, other: LadderSeries) -> LadderSeries:
        return self + (-other)

    def truncate(self, order: int) -> LadderSeries:
        if self.order is not None and order > self.order:
            raise ValueError("cannot extend a truncated series")
        return LadderSeries(self.base, self.coeffs, order, self.var)

    def evaluate(self, u, power: Callable | None = None):
        """Sum the known terms at ``u``.

        ``power(u, e)`` computes ``u**e``; by default Python's ``**`` is used,
        which is only exact for integer exponents.
        """
        power = power or (lambda x, e: x ** e)
        return sum(c * power(u, self.exponent(j)) for j, c in enumerate(self.coeffs) if c)


def ladder_multiply(a: LadderSeries, b: LadderSeries) -> LadderSeries:
    """Cauchy product; the result is known as far as both factors are."""
    a._check(b)
    orders = [o for o in (a.order, b.order) if o is not None]
    order = min(orders) if orders else None
    if order is None:
        length = max(0, len(a.coeffs) + len(b.coeffs) - 1)
    else:
        length = order + 1
    out = [Fraction(0)] * length
    for i, x in enumerate(a.coeffs):
        if x == 0 or i >= length:
            continue
        for j, y in enumerate(b.coeffs):
            if i + j >= length:
                break
            out[i + j] += x * y
    return LadderSeries(a.base + b.base, tuple(out), order, a.var)


# ---------------------------------------------------------------------------
# Truncated power series as plain lists, coefficients in any ring


def series_mul(a: Sequence, b: Sequence, n: int, zero=Fraction(0)) -> list:
    """Product of two series truncated to ``n`` terms."""
    out = [zero] * n
    for i, x in enumerate(a[:n]):
        for j, y in enumerate(b[: n - i]):
            out[i + j] = out[i + j] + x * y
    return out


def series_inverse(a: Sequence[Fraction], n: int) -> list[Fraction]:
    """Reciprocal of a scalar series with invertible constant term."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("series has no reciprocal")
    inv0 = 1 / as_rational(a[0])
    out = [inv0]
    for k in range(1, n):
        acc = sum((a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out.append(-acc * inv0)
    return out


def series_pow(a: Sequence, k: int, n: int, one, zero) -> list:
    out = [one] + [zero] * (n - 1)
    for _ in range(k):
        out = series_mul(out, a, n, zero)
    return out
