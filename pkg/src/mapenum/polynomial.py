"""Univariate polynomials in N with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


class RationalPolynomial:
    """Dense polynomial; ``coefficients[k]`` multiplies ``N**k``.

    Trailing zeros are trimmed so ``degree`` is canonical (the zero
    polynomial has degree -1).

    >>> x = RationalPolynomial.variable()
    >>> str((x + 1) * (x - 1))
    'N^2 - 1'
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Number] = ()):
        c = [Fraction(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, value: Number) -> "RationalPolynomial":
        return cls([value])

    @classmethod
    def variable(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def coefficient(self, power: int) -> Fraction:
        return self._c[power] if 0 <= power < len(self._c) else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def integer_coefficients(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficients in {self}")
        return [int(c) for c in self._c]

    def __call__(self, value: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * value + c
        return acc

    @staticmethod
    def _lift(other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return RationalPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self._c)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "N" if k == 1 else f"N^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def falling_binomial(x: Number, k: int) -> Fraction:
    """Generalised binomial ``C(x, k) = x (x-1) ... (x-k+1) / k!`` for rational ``x``."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    den = 1
    for i in range(k):
        num *= Fraction(x) - i
        den *= i + 1
    return num / den


def binomial_poly(shift: Number, scale: Number, k: int) -> RationalPolynomial:
    """``C(scale*N + shift, k)`` as a polynomial in N.

    >>> str(binomial_poly(0, 1, 2))
    '1/2*N^2 - 1/2*N'
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    out = RationalPolynomial.constant(1)
    for i in range(k):
        out = out * RationalPolynomial([Fraction(shift) - i, Fraction(scale)])
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return out * Fraction(1, fact)


def binomial_half(n: int, m: int) -> Fraction:
    """``C(n - 1/2, m)``."""
    return falling_binomial(Fraction(2 * n - 1, 2), m)
