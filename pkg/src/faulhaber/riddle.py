"""Faulhaber's 1631 cryptomath puzzle, solved mechanically.

The puzzle hides five letters in quotients built from coefficients of
``sum^9 n^8``, ``sum n^22`` through ``sum n^25``, each normalized to
integers in Faulhaber's way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .exactnum import as_rational
from .polyring import Poly
from .powersum import power_sum, to_faulhaber_form

__all__ = [
    "ALPHABET",
    "RiddleReport",
    "integer_normalization",
    "sigma9_n8_coeffs",
    "sigma_n25_leading",
    "minimal_2k_scaling",
    "faulhaber_lists",
    "letter",
    "solve_riddle",
]

# Latin alphabet of the period: no J, V or W
ALPHABET = "ABCDEFGHIKLMNOPQRSTUXYZ"

DIVISORS = {1: 7924252, 2: 112499648, 3: 2945002, 4: 120964, 5: 199444}


def integer_normalization(p: Poly) -> tuple[list[int], int]:
    """Write ``p = (a_1 n + ... + a_k n^k) / d`` with coprime integer ``a_i``.

    ``d`` is taken as ``p(1)`` times the scale, i.e. ``sum a_i`` whenever
    ``p(1) = 1``.
    """
    if p.coeff(0):
        raise ValueError("expected a polynomial without constant term")
    den = p.denominator()
    nums = [int(c * den) for c in p.coeffs]
    g = 0
    for a in nums:
        g = gcd(g, a)
    a = [x // g for x in nums]
    d = Fraction(den, g)
    if d.denominator != 1:
        raise ArithmeticError("normalization did not produce an integer denominator")
    return a[1:], int(d)


def sigma9_n8_coeffs() -> tuple[list[int], int]:
    """``(a_1..a_17, d)`` with ``sum^9 n^8 = (a_17 n^17 + ... + a_1 n) / d``."""
    a, d = integer_normalization(power_sum(8, 9))
    if sum(a) != d:
        raise ArithmeticError("sum of the a_i differs from d")
    return a, d


def sigma_n25_leading() -> tuple[int, int]:
    """``(A_26, D)`` for ``sum n^25`` under the same normalization."""
    a, d = integer_normalization(power_sum(25, 1))
    return a[-1], d


def minimal_2k_scaling(coeffs) -> tuple[Fraction, list[int]]:
    """Smallest ``t > 0`` with every ``t * coeffs[k]`` an integer multiple of ``2^k``.

    Returns ``t`` and the scaled integers with signs flipped so that the
    alternating pattern ``c_top N^top - c_(top-1) N^(top-1) + ...`` shows
    positive magnitudes.
    """
    coeffs = [as_rational(c) for c in coeffs]
    if not any(coeffs):
        raise ValueError("all coefficients are zero")
    reduced = [c / 2 ** k for k, c in enumerate(coeffs)]
    den = 1
    num = 0
    for v in reduced:
        den = lcm(den, v.denominator)
        num = gcd(num, v.numerator)
    t = Fraction(den, num)
    top = len(coeffs) - 1
    scaled = [int(t * c) * (-1) ** (top - k) for k, c in enumerate(coeffs)]
    return t, scaled


def faulhaber_lists() -> dict[str, tuple[Fraction, list[int]]]:
    """The b, c, d, e lists: ``sum n^22..n^25`` over ``sum n^2`` or ``sum n^3`` in ``N``."""
    out = {}
    for name, m in (("b", 22), ("c", 23), ("d", 24), ("e", 25)):
        g = to_faulhaber_form(m, 1).g
        if m % 2:
            # the factor here is sum n^3 = N * sum n
            g, rem = g.divmod(Poly.gen("N"))
            if not rem.is_zero():
                raise ArithmeticError(f"sum n^{m} is not divisible by N^2")
        out[name] = minimal_2k_scaling(g.coeffs)
    return out


def letter(x: Fraction) -> str | None:
    if x.denominator != 1 or not 1 <= x <= len(ALPHABET):
        return None
    return ALPHABET[int(x) - 1]


@dataclass
class RiddleReport:
    a: list[int]
    d: int
    A26: int
    D: int
    lists: dict[str, list[int]]
    scalings: dict[str, Fraction]
    c_scale: Fraction
    x: list[Fraction]
    integral: list[bool]
    letters: list[str | None]
    alt_x5: Fraction | None = None
    name: str = field(default="")

    def constant(self, key: str) -> int | Fraction:
        """Look up a published constant such as ``"a10"``, ``"c3"`` or ``"D"``."""
        if key == "D":
            return self.D
        if key == "A26":
            return self.A26
        head, idx = key[0], int(key[1:])
        if head == "a":
            return self.a[idx - 1]
        return self.lists[head][idx]


def solve_riddle(c_scale=Fraction(1, 4), alt_x5: bool = False) -> RiddleReport:
    """Evaluate ``x_1..x_5`` with every ``c_k`` multiplied by ``c_scale``.

    ``name`` is the recovered letters when ``x_1..x_4`` all land in the
    alphabet, completed by the nominative ending ``S``: ``x_5`` never
    yields a letter.
    """
    c_scale = as_rational(c_scale)
    a, d = sigma9_n8_coeffs()
    A26, D = sigma_n25_leading()
    raw = faulhaber_lists()
    lists = {k: list(v[1]) for k, v in raw.items()}
    scalings = {k: v[0] for k, v in raw.items()}
    b, dd, e = lists["b"], lists["d"], lists["e"]
    c = [x * c_scale for x in lists["c"]]

    def A(i):
        return a[i - 1]

    nums = [
        c[3] - A(12),
        b[5] + A(10),
        A(11) - b[9] - c[1],
        A(14) + c[7],
        A26 * A(11) - D + A(13) + dd[11] + e[11],
    ]
    x = [Fraction(v) / DIVISORS[i] for i, v in enumerate(nums, start=1)]
    letters = [letter(v) for v in x]
    alt = None
    if alt_x5:
        alt = (Fraction(A26 * A(11), D) + A(13) + dd[11] + e[11]) / DIVISORS[5]
    name = ""
    if all(letters[:4]):
        name = "".join(letters[:4]) + (letters[4] or "S")
    return RiddleReport(a, d, A26, D, lists, scalings, c_scale, x,
                        [v.denominator == 1 for v in x], letters, alt, name)
