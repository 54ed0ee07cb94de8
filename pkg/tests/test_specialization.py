from fractions import Fraction

import pytest

from lassalle.partitions import Partition, SkewShape, enumerate_partitions, enumerate_skew_shapes
from lassalle.specialization import (SpecializationContext, make_context, phi_e, phi_h, phi_p,
                                     phi_schur_dual, phi_skew_schur)

T_VALUES = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 3)]


@pytest.fixture(params=T_VALUES, ids=str)
def ctx(request):
    return make_context(request.param)


def test_phi_h_examples():
    assert phi_h(make_context(1), 0) == 1
    assert phi_h(make_context(1), 2) == Fraction(1, 4)
    assert phi_h(make_context(2), 1) == Fraction(1, 2)
    assert phi_h(make_context(1), -3) == 0


def test_phi_h_past_memo_bound():
    small = make_context(Fraction(5, 2), bound=3)
    big = make_context(Fraction(5, 2))
    for n in range(10):
        assert phi_h(small, n) == phi_h(big, n)


def test_context_rejects_nonpositive_t():
    with pytest.raises(ValueError):
        make_context(0)
    with pytest.raises(ValueError):
        SpecializationContext(Fraction(-1, 2))


def test_skew_schur_examples():
    c = make_context(1)
    assert phi_skew_schur(c, SkewShape(Partition((2,)))) == Fraction(1, 4)
    assert phi_skew_schur(c, SkewShape(Partition((1, 1)))) == Fraction(3, 4)
    assert phi_skew_schur(c, SkewShape(Partition())) == 1


def test_phi_e_examples():
    c = make_context(1)
    assert phi_e(c, 1) == 1
    assert phi_e(c, 2) == Fraction(3, 4)
    assert phi_e(make_context(Fraction(7, 3)), 0) == 1


def test_phi_p_examples():
    assert phi_p(make_context(1), 1) == 1
    assert phi_p(make_context(1), 2) == Fraction(-1, 2)
    assert phi_p(make_context(2), 1) == Fraction(1, 2)
    with pytest.raises(ValueError):
        phi_p(make_context(1), 0)


def test_positivity_skew(ctx):
    for s in enumerate_skew_shapes(8):
        assert phi_skew_schur(ctx, s) > 0, s


def test_trivial_skew(ctx):
    for lam in enumerate_partitions(8):
        assert phi_skew_schur(ctx, SkewShape(lam, lam)) == 1


def test_dual_jacobi_trudi(ctx):
    for lam in enumerate_partitions(6):
        assert phi_schur_dual(ctx, lam) == phi_skew_schur(ctx, SkewShape(lam))


def test_rows_and_columns(ctx):
    for n in range(11):
        assert phi_skew_schur(ctx, SkewShape(Partition((n,)))) == phi_h(ctx, n)
        assert phi_skew_schur(ctx, SkewShape(Partition((1,) * n))) == phi_e(ctx, n)


def test_e_and_p_signs(ctx):
    for n in range(1, 13):
        assert phi_e(ctx, n) > 0
        assert (-1) ** (n - 1) * phi_p(ctx, n) > 0


def test_newton_identity_for_e(ctx):
    # n e_n = sum_{k=1}^{n} (-1)^{k-1} e_{n-k} p_k ties the two recurrences together
    for n in range(1, 10):
        rhs = sum((-1) ** (k - 1) * phi_e(ctx, n - k) * phi_p(ctx, k) for k in range(1, n + 1))
        assert n * phi_e(ctx, n) == rhs
