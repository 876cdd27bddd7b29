"""Central factorial numbers and the integer bases ``T_k``, ``U_k``.

``T(2m, 2k)`` are the central factorial numbers of the second kind, with

    sum n^(2m-1) = sum_k (2k-1)! T(2m, 2k) C(n+k, 2k).

``T_k(n) = C(n+k+1, 2k+1) + C(n+k, 2k+1)`` and ``U_k = nabla T_k`` are
integer-valued polynomial bases for sums of even powers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactnum import as_rational, factorial
from .polyring import Poly, binomial_poly, series_mul

__all__ = [
    "central_factorial",
    "central_factorial_row",
    "basis_T",
    "basis_U",
    "odd_powersum_cf",
    "odd_cf_polynomial",
    "repeated_odd_cf_polynomial",
    "u_expansion",
    "even_powersum_cf",
    "even_cf_polynomial",
    "even_cf_to_quotient",
    "even_odd_cf_dual",
    "odd_cf_to_quotient",
    "stirling2",
    "stirling_expansion",
    "stirling_polynomials",
    "gf_central_rows",
    "gf_check_central",
]


@lru_cache(maxsize=None)
def central_factorial_row(m: int) -> tuple[int, ...]:
    """``(T(2m, 0), T(2m, 2), ..., T(2m, 2m))``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return (1,)
    prev = central_factorial_row(m - 1) + (0,)
    # T(2m+2, 2k) = k^2 T(2m, 2k) + T(2m, 2k-2)
    return tuple(k * k * prev[k] + (prev[k - 1] if k else 0) for k in range(m + 1))


def central_factorial(m: int, k: int) -> int:
    """``T(2m, 2k)`` for ``1 <= k <= m``."""
    if not 1 <= k <= m:
        raise ValueError(f"T(2m, 2k) is defined here for 1 <= k <= m, got m={m}, k={k}")
    return central_factorial_row(m)[k]


@lru_cache(maxsize=None)
def basis_T(k: int, var: str = "n") -> Poly:
    # T_0 = 2n + 1 by the same formula; this is what the b-expansion needs
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = binomial_poly(k + 1, 2 * k + 1, var) + binomial_poly(k, 2 * k + 1, var)
    b = Poly([1, 2], var) * binomial_poly(k, 2 * k, var).scale(Fraction(1, 2 * k + 1))
    if a != b:
        raise AssertionError(f"the two forms of T_{k} disagree")
    return a


@lru_cache(maxsize=None)
def basis_U(k: int, var: str = "n") -> Poly:
    if k < 1:
        raise ValueError("k must be positive")
    a = Poly.gen(var) * binomial_poly(k - 1, 2 * k - 1, var).scale(Fraction(1, k))
    b = binomial_poly(k, 2 * k, var) + binomial_poly(k - 1, 2 * k, var)
    if a != b:
        raise AssertionError(f"the two forms of U_{k} disagree")
    return a


# ---------------------------------------------------------------------------
# Odd powers


def odd_powersum_cf(m: int) -> list[int]:
    """``[(2k-1)! T(2m, 2k) for k = 1..m]``, coefficients of ``C(n+k, 2k)``."""
    if m < 1:
        raise ValueError("m must be positive")
    row = central_factorial_row(m)
    return [factorial(2 * k - 1) * row[k] for k in range(1, m + 1)]


def odd_cf_polynomial(coeffs, var: str = "n") -> Poly:
    """``sum_k coeffs[k-1] C(n+k, 2k)``."""
    out = Poly((), var)
    for k, c in enumerate(coeffs, start=1):
        out = out + binomial_poly(k, 2 * k, var).scale(c)
    return out


def repeated_odd_cf_polynomial(m: int, r: int, var: str = "n") -> Poly:
    """``r``-fold sum of ``n^(2m-1)``: each ``C(n+k-1, 2k-1)`` becomes ``C(n+k-1+r, 2k-1+r)``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    out = Poly((), var)
    for k, c in enumerate(odd_powersum_cf(m), start=1):
        out = out + binomial_poly(k - 1 + r, 2 * k - 1 + r, var).scale(c)
    return out


# ---------------------------------------------------------------------------
# Even powers


def u_expansion(p: Poly) -> list[Fraction]:
    """Coefficients ``c_1..c_k`` with ``p = sum c_j U_j`` (p even, ``p(0) = 0``).

    Triangular solve: ``U_j`` has degree ``2j``.
    """
    if p.degree % 2 or (p - p.reflect(0)).coeffs or p.coeff(0):
        raise ValueError("expected an even polynomial vanishing at 0")
    top = p.degree // 2
    out = [Fraction(0)] * top
    rem = p
    for j in range(top, 0, -1):
        u = basis_U(j, p.var)
        c = rem.coeff(2 * j) / u.leading
        out[j - 1] = c
        rem = rem - u.scale(c)
    if not rem.is_zero():
        raise ArithmeticError("U-expansion left a remainder")
    return out


def even_powersum_cf(m: int) -> list[Fraction]:
    """``[c_1..c_m]`` with ``sum n^(2m) = sum_k c_k T_k(n)``.

    ``n^(2m)`` is expanded in the ``U_k`` and summed using ``nabla T_k = U_k``
    (every ``T_k`` vanishes at 0).
    """
    if m < 1:
        raise ValueError("m must be positive")
    return u_expansion(Poly.monomial(2 * m))


def even_cf_polynomial(coeffs, var: str = "n") -> Poly:
    out = Poly((), var)
    for k, c in enumerate(coeffs, start=1):
        out = out + basis_T(k, var).scale(c)
    return out


def even_cf_to_quotient(coeffs) -> list[Fraction]:
    """``T_k = (2n+1)/(2k+1) C(n+k, 2k)``: turn T-coefficients into the ``a_k`` of
    ``sum n^(2m) / (2n+1) = sum_k a_k C(n+k, 2k)``."""
    return [as_rational(c) / (2 * k + 1) for k, c in enumerate(coeffs, start=1)]


def even_odd_cf_dual(m: int, a) -> list[Fraction]:
    """Map the ``a_k`` of ``sum n^(2m)/(2n+1)`` to the coefficients of ``sum n^(2m-1)``.

    ``sum n^(2m-1) = sum_k ((2k+1)/k) a_k C(n+k, 2k)``.
    """
    a = [as_rational(x) for x in a]
    if len(a) != m:
        raise ValueError(f"expected {m} coefficients, got {len(a)}")
    return [Fraction(2 * k + 1, k) * c for k, c in enumerate(a, start=1)]


def odd_cf_to_quotient(m: int, odd) -> list[Fraction]:
    """Inverse of :func:`even_odd_cf_dual`."""
    odd = [as_rational(x) for x in odd]
    if len(odd) != m:
        raise ValueError(f"expected {m} coefficients, got {len(odd)}")
    return [Fraction(k, 2 * k + 1) * c for k, c in enumerate(odd, start=1)]


# ---------------------------------------------------------------------------
# Stirling comparison


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Stirling numbers of the second kind, ``{0 0} = 1`` and ``{m 0} = 0`` for m > 0."""
    if m == 0 or k == 0:
        return int(m == k)
    if k > m or k < 0:
        return 0
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


def stirling_expansion(m: int) -> tuple[list[int], list[int]]:
    """Both Stirling-number forms of ``sum n^m``, listed for ``k = 1..m``.

    First: coefficient ``k! {m k}`` of ``C(n+1, k+1)``.
    Second: coefficient ``k! {m k} (-1)^(m-k)`` of ``C(n+k, k+1)``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    first = [factorial(k) * stirling2(m, k) for k in range(1, m + 1)]
    second = [(-1) ** (m - k) * c for k, c in zip(range(1, m + 1), first)]
    return first, second


def stirling_polynomials(m: int, var: str = "n") -> tuple[Poly, Poly]:
    first, second = stirling_expansion(m)
    p = Poly((), var)
    q = Poly((), var)
    for k, (a, b) in enumerate(zip(first, second), start=1):
        p = p + binomial_poly(1, k + 1, var).scale(a)
        q = q + binomial_poly(k, k + 1, var).scale(b)
    return p, q


# ---------------------------------------------------------------------------
# Generating function cosh(2x sinh(y/2))


def gf_central_rows(M: int) -> list[Poly]:
    """``(2m)! [y^(2m)] cosh(2x sinh(y/2))`` as polynomials in ``x``, ``m <= M``.

    Computed as a truncated series in ``y`` with polynomial-in-``x``
    coefficients: the sinh series is composed into the cosh series.
    """
    n = 2 * M + 1
    zero = Poly((), "x")
    one = Poly([1], "x")
    x = Poly.gen("x")
    # s(y) = 2x sinh(y/2) = sum_j 2x (y/2)^(2j+1) / (2j+1)!
    s = [zero] * n
    for j in range(M + 1):
        if 2 * j + 1 < n:
            s[2 * j + 1] = x.scale(Fraction(2, 2 ** (2 * j + 1) * factorial(2 * j + 1)))
    s2 = series_mul(s, s, n, zero)
    total = [zero] * n
    power = [one] + [zero] * (n - 1)
    for i in range(M + 1):
        scale = Fraction(1, factorial(2 * i))
        total = [t + p.scale(scale) for t, p in zip(total, power)]
        power = series_mul(power, s2, n, zero)
    return [total[2 * m].scale(factorial(2 * m)) for m in range(M + 1)]


def gf_check_central(M: int) -> bool:
    rows = gf_central_rows(M)
    for m in range(M + 1):
        expected = Poly([c if i % 2 == 0 else 0
                         for i, c in enumerate(_spread(central_factorial_row(m)))], "x")
        if rows[m] != expected:
            return False
    return True


def _spread(row):
    # T(2m, 2k) sits at x^(2k)
    out = []
    for c in row:
        out.extend([c, 0])
    return out[:-1]
