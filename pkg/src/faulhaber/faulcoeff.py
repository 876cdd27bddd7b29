"""Faulhaber coefficients ``A_k^(w)``.

``sum n^(2m-1) = (1/2m) sum_k A_k^(m) u^(m-k)`` with ``u = n^2 + n``. The
coefficients are computed here by four routes that share nothing but the
definition of the problem:

* the triangular recurrence ``sum_j C(w-j, 2k+1-2j) A_j = 0`` (``a_by_recurrence``,
  and symbolically in ``w`` by ``a_symbolic``);
* Jacobi's recurrence linking ``w`` and ``w - 1`` (``a_by_jacobi``), which
  for integer ``w`` never touches a Bernoulli number;
* the explicit Bernoulli-number sum (``a_explicit``);
* a ``k x k`` binomial determinant (``a_by_determinant``), whose value at
  integer arguments is also counted by :func:`staircase_count`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import bernoulli_number, bernoulli_polynomial
from .exactnum import as_rational, binomial, factorial, int_binomial
from .polyring import Poly, series_inverse, series_mul

__all__ = [
    "CoefficientTable",
    "PivotError",
    "StaircaseTooLarge",
    "a_by_recurrence",
    "a_symbolic",
    "a_by_jacobi",
    "a_explicit",
    "a_by_determinant",
    "determinant_D",
    "determinant",
    "staircase_count",
    "closed_form_check",
    "gf_faulhaber_coefficients",
    "gf_check_faulhaber",
    "T1",
]


class PivotError(ZeroDivisionError):
    """A recurrence hit a vanishing leading factor."""

    def __init__(self, message: str, w, k: int):
        super().__init__(message)
        self.w = w
        self.k = k


class StaircaseTooLarge(RuntimeError):
    """The staircase enumeration exceeded its node budget."""


@dataclass(frozen=True)
class CoefficientTable:
    """``entries[k] = A_k^(w)`` for ``k = 0..len(entries)-1``."""

    w: Fraction
    entries: tuple[Fraction, ...]
    method: str = ""

    def __getitem__(self, k: int) -> Fraction:
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def a_by_recurrence(w, kmax: int, special_values: bool = True) -> CoefficientTable:
    """Solve the triangular system for ``A_0..A_kmax`` at a rational ``w``.

    The pivot of row ``k`` is ``w - k``. At a positive integer ``w`` the row
    ``k = w`` degenerates; with ``special_values`` the limit value
    ``B_{2w}`` is filled in, otherwise :class:`PivotError` is raised.
    """
    w = as_rational(w)
    out = [Fraction(1)]
    for k in range(1, kmax + 1):
        acc = sum(binomial(w - j, 2 * k + 1 - 2 * j) * out[j] for j in range(k))
        pivot = w - k
        if pivot == 0:
            if not special_values:
                raise PivotError(f"pivot w - k vanishes at w = k = {k}", w, k)
            out.append(bernoulli_number(2 * k))
            continue
        out.append(-acc / pivot)
    return CoefficientTable(w, tuple(out), "recurrence")


def _binomial_poly_w(shift: int, k: int) -> Poly:
    """``C(w + shift, k)`` as a polynomial in ``w``."""
    out = Poly([1], "w")
    for i in range(k):
        out = out * Poly([shift - i, 1], "w")
    return out.scale(Fraction(1, factorial(k)))


@lru_cache(maxsize=None)
def _symbolic_table(kmax: int) -> tuple[Poly, ...]:
    if kmax == 0:
        return (Poly([1], "w"),)
    prev = _symbolic_table(kmax - 1)
    k = kmax
    acc = Poly((), "w")
    for j in range(k):
        acc = acc + _binomial_poly_w(-j, 2 * k + 1 - 2 * j) * prev[j]
    # (w - k) A_k = -acc, and the division is exact
    q, rem = acc.divmod(Poly([-k, 1], "w"))
    if not rem.is_zero():
        raise ArithmeticError(f"A_{k} is not a polynomial in w")
    return prev + (-q,)


def a_symbolic(k: int) -> Poly:
    """``A_k^(w)`` as a polynomial in ``w`` (degree ``2k``)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _symbolic_table(k)[k]


# ---------------------------------------------------------------------------
# Jacobi's recurrence
#   (2w-2k)(2w-2k-1) A_k^(w) + (w-k+1)(w-k) A_{k-1}^(w) = 2w(2w-1) A_k^(w-1)


@lru_cache(maxsize=None)
def _jacobi_int(w: int, k: int) -> Fraction:
    if k == 0:
        return Fraction(1)
    if w == 0:
        return Fraction(0)
    if k == w:
        # w -> w+1, k -> w: the A_w^(w+1) term vanishes
        return 2 * _jacobi_int(w + 1, w - 1) / ((2 * w + 2) * (2 * w + 1))
    lhs = 2 * w * (2 * w - 1) * _jacobi_int(w - 1, k) - (w - k + 1) * (w - k) * _jacobi_int(w, k - 1)
    return Fraction(lhs, (2 * w - 2 * k) * (2 * w - 2 * k - 1))


def _jacobi_lift(prev: list[Fraction], w: Fraction, kmax: int) -> list[Fraction]:
    """Row ``w`` from row ``w - 1``."""
    row = [Fraction(1)]
    for k in range(1, kmax + 1):
        lead = (2 * w - 2 * k) * (2 * w - 2 * k - 1)
        if lead == 0:
            raise PivotError(f"Jacobi factor vanishes at w = {w}, k = {k}", w, k)
        row.append((2 * w * (2 * w - 1) * prev[k] - (w - k + 1) * (w - k) * row[k - 1]) / lead)
    return row


def _jacobi_lower(row: list[Fraction], w: Fraction, kmax: int) -> list[Fraction]:
    """Row ``w - 1`` from row ``w``."""
    lead = 2 * w * (2 * w - 1)
    if lead == 0:
        raise PivotError(f"Jacobi factor 2w(2w-1) vanishes at w = {w}", w, 0)
    out = [Fraction(1)]
    for k in range(1, kmax + 1):
        out.append(((2 * w - 2 * k) * (2 * w - 2 * k - 1) * row[k]
                    + (w - k + 1) * (w - k) * row[k - 1]) / lead)
    return out


def a_by_jacobi(w, kmax: int, base: CoefficientTable | None = None) -> CoefficientTable:
    """Coefficients at ``w`` from Jacobi's recurrence.

    For integer ``w >= 0`` the recursion bottoms out at ``A^(0) = (1, 0, ...)``
    and the diagonal value ``A_w^(w)`` is obtained from row ``w + 1``; no
    Bernoulli numbers are used. Any other ``w`` starts from a ``base`` row
    an integer distance away and is moved one step at a time. The default
    base (from the triangular recurrence) sits at ``w + 2`` for positive
    ``w``, so only downward steps are taken, and at ``w - 2`` for negative
    ``w``, so only upward steps are taken; neither path meets a vanishing
    leading factor.
    """
    w = as_rational(w)
    if w.denominator == 1 and w >= 0:
        entries = tuple(_jacobi_int(int(w), k) for k in range(kmax + 1))
        return CoefficientTable(w, entries, "jacobi")
    if base is None:
        base = a_by_recurrence(w + 2 if w > 0 else w - 2, kmax)
    gap = w - base.w
    if gap.denominator != 1 or len(base) < kmax + 1:
        raise ValueError(f"base table must lie an integer distance from w = {w} "
                         f"and hold at least {kmax + 1} entries")
    row = list(base.entries[: kmax + 1])
    cur = base.w
    for _ in range(int(gap)):
        cur += 1
        row = _jacobi_lift(row, cur, kmax)
    for _ in range(-int(gap)):
        row = _jacobi_lower(row, cur, kmax)
        cur -= 1
    return CoefficientTable(w, tuple(row), "jacobi")


# ---------------------------------------------------------------------------
# Explicit formula


def a_explicit(m: int, k: int) -> Fraction:
    """``A_k^(m)`` for integers ``0 <= k < m`` as a finite Bernoulli sum."""
    if not 0 <= k < m:
        raise ValueError("explicit formula needs 0 <= k < m")
    d = m - k
    total = Fraction(0)
    for j in range(d):  # the j = d term carries the factor (d - j) = 0
        total += (int_binomial(2 * m, d - j) * int_binomial(d + j, j)
                  * Fraction(d - j, d + j) * bernoulli_number(m + k + j))
    return (-1) ** d * total


# ---------------------------------------------------------------------------
# Determinant form


def determinant(matrix: list[list]) -> Fraction:
    """Exact determinant by rational Gaussian elimination.

    The first nonzero entry in each column is taken as pivot.
    """
    a = [[as_rational(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det *= piv
        for r in range(c + 1, n):
            f = a[r][c] / piv
            if f:
                for j in range(c, n):
                    a[r][j] -= f * a[c][j]
    return det


def determinant_matrix(w, k: int) -> list[list[Fraction]]:
    """Row ``i`` holds ``C(w-k+i, 2i+3-2c)`` for columns ``c = 1..k``."""
    w = as_rational(w)
    rows = []
    for i in range(1, k + 1):
        top = w - k + i
        rows.append([binomial(top, 2 * (i - c) + 3) if 2 * (i - c) + 3 >= 1 else Fraction(0)
                     for c in range(1, k + 1)])
    return rows


def determinant_D(w, k: int) -> Fraction:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Fraction(1)
    return determinant(determinant_matrix(w, k))


def a_by_determinant(w, k: int) -> Fraction:
    """``A_k^(w) = D(w, k) / ((1-w)(2-w)...(k-w))``.

    Raises :class:`PivotError` when ``w`` is one of ``1..k``; ``determinant_D``
    still gives the numerator there.
    """
    w = as_rational(w)
    if k == 0:
        return Fraction(1)
    prefactor = Fraction(1)
    for i in range(1, k + 1):
        prefactor *= i - w
    if prefactor == 0:
        raise PivotError(f"prefactor (1-w)...(k-w) vanishes at w = {w}", w, k)
    return determinant_D(w, k) / prefactor


def T1(x):
    """``x(x+1)(2x+1)/6``, the sum of the first ``x`` squares."""
    x = as_rational(x)
    return x * (x + 1) * (2 * x + 1) / 6


# ---------------------------------------------------------------------------
# Staircase fillings


def staircase_count(w: int, k: int, max_nodes: int = 10 ** 7) -> int:
    """Count fillings ``a_1..a_{3k}`` of the k-rowed triple staircase.

    Row ``j`` is ``(a_{3j-2}, a_{3j-1}, a_{3j})``, strictly increasing and
    bounded by ``w - k + j``. Each row sits one cell to the left of the row
    above, so the columns force ``a_{3j-2} < a_{3j+2}`` and
    ``a_{3j-1} < a_{3j+3}``.
    """
    if k < 1 or w <= k:
        raise ValueError("staircase needs k >= 1 and w > k")
    nodes = 0
    count = 0

    def rows(j: int, prev: tuple[int, int, int] | None):
        nonlocal nodes, count
        if j > k:
            count += 1
            return
        bound = w - k + j
        for x in range(1, bound - 1):
            lo2 = max(x + 1, prev[0] + 1) if prev else x + 1
            for y in range(lo2, bound):
                lo3 = max(y + 1, prev[1] + 1) if prev else y + 1
                for z in range(lo3, bound + 1):
                    nodes += 1
                    if nodes > max_nodes:
                        raise StaircaseTooLarge(
                            f"staircase ({w}, {k}) exceeds {max_nodes} search nodes")
                    rows(j + 1, (x, y, z))

    rows(1, None)
    return count


# ---------------------------------------------------------------------------
# Closed form and generating function


def closed_form_check(m: int) -> bool:
    """``sum_{k<=m} A_k^(m) u^(m-k) == B_{2m}(n+1)`` with ``u = n^2 + n``."""
    if m < 1:
        raise ValueError("m must be positive")
    table = a_by_recurrence(m, m)
    u = Poly([0, 1, 1], "n")
    lhs = Poly((), "n")
    for k in range(m + 1):
        lhs = lhs + (u ** (m - k)).scale(table[k])
    rhs = bernoulli_polynomial(2 * m, "n").shift(1)
    return lhs == rhs


def gf_faulhaber_coefficients(M: int) -> list[Poly]:
    """``(2m)! [z^(2m)]`` of ``(z/2) cosh(sqrt(1+4u) z/2) / sinh(z/2)``, ``m <= M``.

    Only even powers of ``z`` occur, so the series is built in ``t = z^2``:
    ``cosh(sqrt(1+4u) z/2) = sum_j (1+4u)^j t^j / (4^j (2j)!)`` and
    ``sinh(z/2)/(z/2) = sum_j t^j / (4^j (2j+1)!)``.
    """
    n = M + 1
    one_plus_4u = Poly([1, 4], "u")
    cosh = [(one_plus_4u ** j).scale(Fraction(1, 4 ** j * factorial(2 * j))) for j in range(n)]
    sinh_ratio = [Fraction(1, 4 ** j * factorial(2 * j + 1)) for j in range(n)]
    inv = [Poly([c], "u") for c in series_inverse(sinh_ratio, n)]
    quotient = series_mul(cosh, inv, n, Poly((), "u"))
    return [quotient[m].scale(factorial(2 * m)) for m in range(n)]


def gf_check_faulhaber(M: int) -> bool:
    coeffs = gf_faulhaber_coefficients(M)
    for m in range(1, M + 1):
        table = a_by_recurrence(m, m)
        expected = Poly([table[m - i] for i in range(m + 1)], "u")
        if coeffs[m] != expected:
            return False
    return True
