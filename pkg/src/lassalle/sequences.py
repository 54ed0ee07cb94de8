"""Catalan numbers and Lassalle's sequence A_n.

``A_n`` is defined by the alternating recursion

    (-1)^(n-1) A_n = C_n + sum_{j=1}^{n-1} (-1)^j C(2n-1, 2j-1) A_j C_{n-j},   A_1 = 1,

which is solved over the rationals; integrality of each ``A_n`` is then
checked rather than assumed.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import binomial


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    q, r = divmod(binomial(2 * n, n), n + 1)
    assert r == 0
    return q


def lassalle_a_exact(N: int) -> list[Fraction]:
    """``A_1..A_N`` as rationals, straight from the recursion."""
    if N < 1:
        raise ValueError("N must be at least 1")
    cat = [catalan(n) for n in range(N + 1)]
    a = [None, Fraction(1)]
    for n in range(2, N + 1):
        rhs = Fraction(cat[n])
        for j in range(1, n):
            term = binomial(2 * n - 1, 2 * j - 1) * a[j] * cat[n - j]
            rhs += -term if j % 2 else term
        a.append(rhs if n % 2 else -rhs)
    return a[1:]


def lassalle_a(N: int) -> list[int]:
    """``A_1..A_N``; raises ``ArithmeticError`` if the recursion yields a non-integer."""
    out = []
    for n, value in enumerate(lassalle_a_exact(N), start=1):
        if value.denominator != 1:
            raise ArithmeticError(f"A_{n} = {value} is not an integer")
        out.append(value.numerator)
    return out


@dataclass
class LassalleTable:
    catalan: list[int]           # C_0..C_N
    a_values: list[int]          # A_1..A_N
    ratios: list[Fraction]       # 2 A_n / C_n for n = 1..N

    @classmethod
    def build(cls, N: int) -> LassalleTable:
        cat = [catalan(n) for n in range(N + 1)]
        a = lassalle_a(N)
        return cls(cat, a, [Fraction(2 * a[n - 1], cat[n]) for n in range(1, N + 1)])

    @property
    def N(self) -> int:
        return len(self.a_values)

    def A(self, n: int) -> int:
        return self.a_values[n - 1]

    def ratio(self, n: int) -> Fraction:
        return self.ratios[n - 1]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "C_n", "A_n", "2A_n/C_n"])
        for n in range(1, self.N + 1):
            w.writerow([n, self.catalan[n], self.A(n), str(self.ratio(n))])
        return buf.getvalue()


@dataclass(frozen=True)
class ZeilbergerRow:
    n: int
    positive: bool
    increasing: bool
    ratio_integer: bool
    ratio_increasing: bool

    @property
    def passed(self) -> bool:
        return self.positive and self.increasing and self.ratio_integer and self.ratio_increasing


def zeilberger_check(N: int) -> list[ZeilbergerRow]:
    """Per-n checks for ``2 <= n <= N``: ``A_n > 0``, ``A_n >= A_{n-1}``,
    ``2A_n/C_n`` integral, and ``2A_n/C_n > 2A_{n-1}/C_{n-1}`` (from n = 3)."""
    if N < 2:
        raise ValueError("N must be at least 2")
    table = LassalleTable.build(N)
    rows = []
    for n in range(2, N + 1):
        rows.append(ZeilbergerRow(
            n=n,
            positive=table.A(n) > 0,
            increasing=table.A(n) >= table.A(n - 1),
            ratio_integer=table.ratio(n).denominator == 1,
            ratio_increasing=n == 2 or table.ratio(n) > table.ratio(n - 1),
        ))
    return rows
