import math
from fractions import Fraction

import pytest

from lassalle.sequences import (LassalleTable, catalan, lassalle_a, lassalle_a_exact,
                                zeilberger_check)


def test_catalan_examples():
    assert [catalan(n) for n in (0, 3, 4)] == [1, 5, 14]


def test_catalan_recurrence():
    c = [catalan(n) for n in range(17)]
    for n in range(16):
        assert c[n + 1] == sum(c[k] * c[n - k] for k in range(n + 1))


def test_lassalle_examples():
    a = lassalle_a(4)
    assert a == [1, 1, 5, 56]


def test_lassalle_integral_and_positive():
    exact = lassalle_a_exact(20)
    assert all(v.denominator == 1 and v > 0 for v in exact)
    assert lassalle_a(20) == [int(v) for v in exact]


def test_lassalle_recursion_residual():
    a = lassalle_a(12)
    for n in range(2, 13):
        rhs = catalan(n) + sum((-1) ** j * math.comb(2 * n - 1, 2 * j - 1)
                               * a[j - 1] * catalan(n - j) for j in range(1, n))
        assert (-1) ** (n - 1) * a[n - 1] == rhs


def test_ratios():
    table = LassalleTable.build(4)
    assert [table.ratio(n) for n in (2, 3, 4)] == [1, 2, 8]


def test_zeilberger_small():
    rows = zeilberger_check(2)
    assert len(rows) == 1 and rows[0].passed
    rows = zeilberger_check(3)
    assert rows[1].n == 3 and rows[1].increasing


def test_zeilberger_twenty():
    rows = zeilberger_check(20)
    assert [r.n for r in rows] == list(range(2, 21))
    assert all(r.passed for r in rows)


def test_zeilberger_rejects_small_N():
    with pytest.raises(ValueError):
        zeilberger_check(1)


def test_csv_export():
    text = LassalleTable.build(4).to_csv()
    assert text.splitlines() == [
        "n,C_n,A_n,2A_n/C_n", "1,1,1,2", "2,2,1,1", "3,5,5,2", "4,14,56,8"]


def test_ratio_type():
    assert isinstance(LassalleTable.build(3).ratios[0], Fraction)
