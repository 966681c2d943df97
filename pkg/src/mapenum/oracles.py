"""Closed-form one-vertex map polynomials (Harer-Zagier and Goulden-Jackson).

Both are evaluated exactly over the rationals and checked to have integer
coefficients before any count is read off.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from mapenum.errors import InvariantError
from mapenum.perm import double_factorial
from mapenum.polynomial import RationalPolynomial, binomial_half, binomial_poly, falling_binomial


def _check_n(n: int) -> None:
    if int(n) != n or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")


def harer_zagier(n: int) -> RationalPolynomial:
    """``G_n(N)``: one-vertex oriented maps with n edges, weighted by ``N**faces``."""
    _check_n(n)
    total = RationalPolynomial()
    for k in range(n + 1):
        total = total + binomial_poly(0, 1, k + 1) * (2**k * comb(n, k))
    out = total * double_factorial(2 * n - 1)
    if not out.is_integral():
        raise InvariantError(f"G_{n} has non-integer coefficients")
    return out


def goulden_jackson(n: int) -> RationalPolynomial:
    """``F_n(N)``: one-vertex unoriented maps with n edges, weighted by ``N**faces``."""
    _check_n(n)
    first = RationalPolynomial()
    for k in range(n + 1):
        inner = RationalPolynomial()
        for r in range(n + 1):
            # C(k + r - 1, k) is the empty product 1 at k = r = 0
            weight = binomial_half(n, n - r) * falling_binomial(k + r - 1, k)
            if weight:
                inner = inner + binomial_poly(Fraction(-1, 2), Fraction(1, 2), r) * weight
        first = first + inner * 2 ** (2 * n - k)
    second = RationalPolynomial()
    for k in range(n + 1):
        second = second + binomial_poly(-1, 1, k + 1) * (2**k * comb(n, k))
    out = first * factorial(n) + second * double_factorial(2 * n - 1)
    if not out.is_integral():
        raise InvariantError(f"F_{n} has non-integer coefficients")
    return out


def genus_coefficients(n: int) -> dict[int, int]:
    """``a_{n,g}``: the coefficient of ``N**(1 + n - 2g)`` in ``G_n``."""
    coeffs = harer_zagier(n).integer_coefficients()
    out = {}
    for power, c in enumerate(coeffs):
        shift = 1 + n - power
        if shift % 2:
            if c:
                raise InvariantError(f"G_{n} has a nonzero coefficient at odd genus shift N^{power}")
            continue
        if c:
            out[shift // 2] = c
    return dict(sorted(out.items()))


def chi_coefficients(n: int) -> dict[int, int]:
    """``f_{n,chi}``: the coefficient of ``N**(n - 1 + chi)`` in ``F_n``."""
    coeffs = goulden_jackson(n).integer_coefficients()
    out = {}
    for power, c in enumerate(coeffs):
        if c:
            out[power - (n - 1)] = c
    return dict(sorted(out.items()))
