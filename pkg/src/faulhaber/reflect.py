"""Reflective functions on the integers.

``f`` is r-reflective when ``f(x) == f(-x - r)`` for all ``x``, and
anti-r-reflective when ``f(x) == -f(-x - r)``. For ``r = 0`` these are the
even and odd functions.

Functions are either :class:`~faulhaber.polyring.Poly` objects, handled
exactly and without any window, or :class:`TabulatedFunction` tables on a
finite integer window. Operations on tables refuse to extrapolate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .centralfact import basis_T, basis_U
from .exactnum import as_rational, int_binomial
from .polyring import Poly, antidifference, binomial_poly

__all__ = [
    "WindowError",
    "TabulatedFunction",
    "AlternatingCorrection",
    "is_reflective",
    "is_anti_reflective",
    "sigma_constant",
    "ANY",
    "Decomposition",
    "decompose",
    "a_expansion",
    "a_reconstruct",
    "b_expansion",
    "a_to_b",
    "b_to_a",
    "ab_convert",
    "b_basis",
]


class WindowError(ValueError):
    """The tabulated window does not contain the points an operation needs."""


@dataclass(frozen=True)
class TabulatedFunction:
    """Values ``f(lo), f(lo+1), ..., f(lo+len-1)``."""

    lo: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_rational(v) for v in self.values))

    @classmethod
    def from_function(cls, f: Callable, lo: int, hi: int) -> TabulatedFunction:
        return cls(lo, tuple(f(x) for x in range(lo, hi + 1)))

    @classmethod
    def from_mapping(cls, table: Mapping[int, object]) -> TabulatedFunction:
        keys = sorted(table)
        if not keys:
            raise WindowError("empty table")
        if keys != list(range(keys[0], keys[-1] + 1)):
            raise WindowError("tabulated points must form a contiguous window")
        return cls(keys[0], tuple(table[k] for k in keys))

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def __call__(self, x: int) -> Fraction:
        if x not in self:
            raise WindowError(f"x = {x} lies outside the window [{self.lo}, {self.hi}]")
        return self.values[x - self.lo]

    def items(self):
        return [(self.lo + i, v) for i, v in enumerate(self.values)]

    def restrict(self, lo: int, hi: int) -> TabulatedFunction:
        if lo not in self or hi not in self:
            raise WindowError(f"[{lo}, {hi}] is not inside [{self.lo}, {self.hi}]")
        return TabulatedFunction(lo, self.values[lo - self.lo: hi - self.lo + 1])


@dataclass(frozen=True)
class AlternatingCorrection:
    """``p(x) + c * (-1)^x``: a polynomial plus the free kernel term."""

    poly: Poly
    c: Fraction

    def __call__(self, x: int) -> Fraction:
        return self.poly(x) + self.c * (-1) ** (x % 2)


# ---------------------------------------------------------------------------
# Predicates


def _pairs(f: TabulatedFunction, r: int):
    for x in range(f.lo, f.hi + 1):
        y = -x - r
        if y in f and x <= y:
            yield x, y


def is_reflective(f, r: int) -> bool:
    """On a table, only the pairs with both points inside the window are checked."""
    if isinstance(f, Poly):
        return (f - f.reflect(r)).is_zero()
    if isinstance(f, TabulatedFunction):
        return all(f(x) == f(y) for x, y in _pairs(f, r))
    if isinstance(f, AlternatingCorrection):
        return is_reflective(f.poly, r) and (f.c == 0 or r % 2 == 0)
    raise TypeError(f"unsupported function type {type(f).__name__}")


def is_anti_reflective(f, r: int) -> bool:
    if isinstance(f, Poly):
        return (f + f.reflect(r)).is_zero()
    if isinstance(f, TabulatedFunction):
        return all(f(x) == -f(y) for x, y in _pairs(f, r))
    if isinstance(f, AlternatingCorrection):
        return is_anti_reflective(f.poly, r) and (f.c == 0 or r % 2 == 1)
    raise TypeError(f"unsupported function type {type(f).__name__}")


class _Any:
    """Marker: every constant works."""

    def __repr__(self):
        return "ANY"


ANY = _Any()


def sigma_constant(f: Poly, r: int):
    """The constant ``C`` that makes ``C + f(1) + ... + f(n)`` anti-(r+1)-reflective.

    For an anti-r-reflective ``f`` every ``C`` makes the sum
    (r+1)-reflective and :data:`ANY` is returned.
    """
    if not isinstance(f, Poly):
        raise TypeError("sigma_constant works on polynomials")
    if is_reflective(f, r):
        q = antidifference(f)
        if r % 2:
            return -q(Fraction(-(r + 1), 2))
        x = Fraction(-r, 2)
        return f(x) / 2 - q(x)
    if is_anti_reflective(f, r):
        return ANY
    raise ValueError(f"f is neither {r}-reflective nor anti-{r}-reflective")


# ---------------------------------------------------------------------------
# Decomposition f = g + h, g r-reflective, h anti-s-reflective


@dataclass(frozen=True)
class Decomposition:
    g: object
    h: object
    r: int
    s: int
    unique: bool


def _poly_decompose(f: Poly, r: int, s: int) -> tuple[Poly, Poly]:
    # basis with exactly one element per degree: (x(x+r))^i for g,
    # (x + s/2)(x(x+s))^i for h; triangular because every element is monic
    xr = Poly([0, r, 1], f.var)
    xs = Poly([0, s, 1], f.var)
    half = Poly([Fraction(s, 2), 1], f.var)
    rem = f
    g = Poly((), f.var)
    h = Poly((), f.var)
    while not rem.is_zero():
        d = rem.degree
        c = rem.leading
        if d % 2 == 0:
            term = (xr ** (d // 2)).scale(c)
            g = g + term
        else:
            term = (half * xs ** (d // 2)).scale(c)
            h = h + term
        rem = rem - term
    return g, h


def decompose(f, r: int, s: int, anchor: tuple[str, int, object] | None = None) -> Decomposition:
    """Split ``f`` into an r-reflective ``g`` plus an anti-s-reflective ``h``.

    Polynomials: the polynomial solution is returned exactly. When ``r`` is
    even and ``s`` is odd, ``(-1)^x`` is both r-reflective and
    anti-s-reflective, so the split is only fixed up to ``C (-1)^x``; passing
    ``anchor=("h", x0, value)`` (or ``("g", ...)``) pins it and yields
    :class:`AlternatingCorrection` parts.

    Tables: supported for ``|r - s| <= 1`` (for larger gaps the kernel has
    period ``2|r - s|`` and one anchor no longer suffices). In the
    non-unique case the default anchor is ``h(0) = 0``. The result covers
    the largest window the data determines.
    """
    unique = not (r % 2 == 0 and s % 2 == 1)
    if isinstance(f, Poly):
        g, h = _poly_decompose(f, r, s)
        if anchor is None or unique:
            return Decomposition(g, h, r, s, unique)
        which, x0, value = anchor
        value = as_rational(value)
        sign = (-1) ** (x0 % 2)
        if which == "h":
            c = (value - h(x0)) * sign
        elif which == "g":
            c = (g(x0) - value) * sign
        else:
            raise ValueError("anchor must name 'g' or 'h'")
        return Decomposition(AlternatingCorrection(g, -c), AlternatingCorrection(h, c),
                             r, s, unique)
    if isinstance(f, TabulatedFunction):
        return _table_decompose(f, r, s, anchor, unique)
    raise TypeError(f"unsupported function type {type(f).__name__}")


def _table_decompose(f: TabulatedFunction, r: int, s: int, anchor, unique: bool) -> Decomposition:
    d = s - r
    if abs(d) > 1:
        raise ValueError("tabulated decomposition needs |r - s| <= 1")

    def F(x):
        # h(x) + h(x - d) = f(x) - f(-x - r)
        y = -x - r
        if x not in f or y not in f:
            return None
        return f(x) - f(y)

    if d == 0:
        pts = [x for x in range(f.lo, f.hi + 1) if -x - r in f]
        if not pts:
            raise WindowError("window contains no reflected pairs")
        h = {x: F(x) / 2 for x in pts}
    else:
        if s % 2 == 0:
            if anchor is not None:
                raise ValueError("the decomposition is unique here; no anchor is accepted")
            x0, h0 = -s // 2, Fraction(0)
        else:
            which, x0, value = anchor if anchor is not None else ("h", 0, 0)
            if x0 not in f:
                raise WindowError(f"anchor point {x0} lies outside the window")
            value = as_rational(value)
            if which == "h":
                h0 = value
            elif which == "g":
                h0 = f(x0) - value
            else:
                raise ValueError("anchor must name 'g' or 'h'")
        if x0 not in f:
            raise WindowError(f"point {x0} lies outside the window")
        h = {x0: h0}
        x = x0
        while True:  # h(x + d) = F(x + d) - h(x)
            v = F(x + d)
            nxt = x + d
            if v is None or nxt not in f:
                break
            h[nxt] = v - h[x]
            x = nxt
        x = x0
        while True:  # h(x - d) = F(x) - h(x)
            v = F(x)
            nxt = x - d
            if v is None or nxt not in f:
                break
            h[nxt] = v - h[x]
            x = nxt
    lo, hi = min(h), max(h)
    ht = TabulatedFunction(lo, tuple(h[x] for x in range(lo, hi + 1)))
    gt = TabulatedFunction(lo, tuple(f(x) - h[x] for x in range(lo, hi + 1)))
    return Decomposition(gt, ht, r, s, unique)


# ---------------------------------------------------------------------------
# a_k and b_k expansions


def _nabla_power_at(f, k: int, x: int) -> Fraction:
    return sum((-1) ** i * int_binomial(k, i) * as_rational(f(x - i)) for i in range(k + 1))


def a_expansion(f, kmax: int) -> list[Fraction]:
    """Coefficients of ``f(n) = sum_k a_k C(n + floor(k/2), k)``, ``k <= kmax``.

    ``a_k`` is the k-th backward difference of ``f`` at ``floor(k/2)``, so a
    table must cover ``-ceil(kmax/2) .. floor(kmax/2)``.
    """
    if isinstance(f, TabulatedFunction):
        lo, hi = -((kmax + 1) // 2), kmax // 2
        if lo not in f or hi not in f:
            raise WindowError(f"a-expansion to order {kmax} needs the window [{lo}, {hi}]")
    return [_nabla_power_at(f, k, k // 2) for k in range(kmax + 1)]


def a_reconstruct(a: Sequence, var: str = "n") -> Poly:
    out = Poly((), var)
    for k, c in enumerate(a):
        if c:
            out = out + binomial_poly(k // 2, k, var).scale(c)
    return out


def a_to_b(a: Sequence) -> list[Fraction]:
    """``b_k = sum_j (-1)^(ceil(j/2) + floor(k/2)) 2^(k-j) a_j``."""
    a = [as_rational(x) for x in a]
    return [sum((-1) ** ((j + 1) // 2 + k // 2) * 2 ** (k - j) * a[j] for j in range(k + 1))
            for k in range(len(a))]


def b_to_a(b: Sequence) -> list[Fraction]:
    """``a_k = 2 b_{k-1} + (-1)^k b_k``."""
    b = [as_rational(x) for x in b]
    return [(2 * b[k - 1] if k else 0) + (-1) ** k * b[k] for k in range(len(b))]


def ab_convert(coeffs: Sequence, direction: str = "a_to_b") -> list[Fraction]:
    if direction == "a_to_b":
        return a_to_b(coeffs)
    if direction == "b_to_a":
        return b_to_a(coeffs)
    raise ValueError(f"unknown direction {direction!r}")


def b_basis(k: int, var: str = "n") -> Poly:
    """The k-th element of ``T_0, U_1, T_1, U_2, T_2, ...``."""
    if k % 2 == 0:
        return basis_T(k // 2, var)
    return basis_U((k + 1) // 2, var)


def b_expansion(f, kmax: int) -> list[Fraction]:
    """Coefficients of ``f = b_0 T_0 + b_1 U_1 + b_2 T_1 + b_3 U_2 + ...``."""
    return a_to_b(a_expansion(f, kmax))
