"""Exact scalar and polynomial arithmetic.

Scalars are :class:`fractions.Fraction` throughout; they normalize on every
operation, so equality and sign tests are exact.  Polynomials are dense
coefficient tuples, constant term first.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optional leading minus, no whitespace)."""
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(value: RationalLike) -> str:
    return str(Fraction(value))


def rising_factorial(t: RationalLike, n: int) -> Fraction:
    """Return ``(t)_n = t (t+1) ... (t+n-1)``; the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = Fraction(t)
    result = Fraction(1)
    for k in range(n):
        result *= t + k
    return result


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


def determinant(matrix: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Exact determinant of a square matrix of rationals.

    Each row is scaled to integers by the lcm of its denominators, the
    integer matrix is reduced by Bareiss fraction-free elimination, and the
    scaling is divided back out.  The 0x0 determinant is 1.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)

    rows = []
    scale = 1
    for row in matrix:
        row = [Fraction(x) for x in row]
        m = math.lcm(*(x.denominator for x in row))
        rows.append([x.numerator * (m // x.denominator) for x in row])
        scale *= m

    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for p in range(k + 1, n):
                if rows[p][k] != 0:
                    rows[k], rows[p] = rows[p], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            lead = ri[k]
            for j in range(k + 1, n):
                # exact: Bareiss guarantees divisibility by the previous pivot
                ri[j] = (pivot * ri[j] - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


class DensePolynomial:
    """Immutable polynomial with rational coefficients, constant term first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("DensePolynomial is immutable")

    @classmethod
    def constant(cls, c: RationalLike) -> DensePolynomial:
        return cls([c])

    @classmethod
    def x(cls) -> DensePolynomial:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> DensePolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> DensePolynomial:
        return cls(parse_rational(s) for s in items)

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, DensePolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == DensePolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DensePolynomial([{', '.join(self.to_strings())}])"

    def _coerce(self, other) -> DensePolynomial:
        if isinstance(other, DensePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return DensePolynomial([other])
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return DensePolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return DensePolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DensePolynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= c * b
        return DensePolynomial(quot), DensePolynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> DensePolynomial:
        return DensePolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> DensePolynomial:
        if self.is_zero():
            return self
        lead = self.leading
        return DensePolynomial(c / lead for c in self.coeffs)

    def reflect(self) -> DensePolynomial:
        """Return ``p(-x)``."""
        return DensePolynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))


def poly_gcd(p: DensePolynomial, q: DensePolynomial) -> DensePolynomial:
    """Monic gcd by the Euclidean algorithm; ``gcd(0, 0)`` is the zero polynomial."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()
