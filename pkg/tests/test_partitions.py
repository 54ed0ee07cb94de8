import itertools

import pytest
from hypothesis import given, strategies as st

from lassalle.partitions import (Partition, SkewShape, conjugate, enumerate_partitions,
                                 enumerate_skew_shapes, index_sets_to_shape, parse_index_list,
                                 parse_partition, parse_shape, partition_counts_euler,
                                 partitions_of, shape_to_index_sets)


def gf_partition_counts(nmax):
    # coefficients of prod_k 1/(1 - x^k), independent of both enumerators
    c = [1] + [0] * nmax
    for k in range(1, nmax + 1):
        for n in range(k, nmax + 1):
            c[n] += c[n - k]
    return c


def P(*parts):
    return Partition(parts)


def test_conjugate_examples():
    assert conjugate(P(3, 1)) == P(2, 1, 1)
    assert conjugate(P()) == P()
    assert conjugate(P(1, 1, 1)) == P(3)


@pytest.mark.parametrize("lam, mu, I, J", [
    ((2, 1), (), (1, 2), (2, 4)),
    ((1,), (), (1,), (2,)),
    ((2, 2), (1,), (1, 3), (3, 4)),
])
def test_shape_to_index_sets(lam, mu, I, J):
    assert shape_to_index_sets(SkewShape(P(*lam), P(*mu))) == (I, J)


def test_index_sets_to_shape_examples():
    assert index_sets_to_shape((1, 2), (2, 4)) == SkewShape(P(2, 1), P())
    assert index_sets_to_shape((1,), (1,)) == SkewShape(P(), P())
    assert index_sets_to_shape((3,), (2,)) is None


def test_index_sets_length_mismatch():
    with pytest.raises(ValueError):
        index_sets_to_shape((1, 2), (3,))


def test_index_sets_must_increase():
    with pytest.raises(ValueError):
        index_sets_to_shape((2, 1), (3, 4))


def test_roundtrip_and_staircase():
    for s in enumerate_skew_shapes(8):
        I, J = shape_to_index_sets(s)
        assert all(a < b for a, b in zip(I, I[1:]))
        assert all(a < b for a, b in zip(J, J[1:]))
        assert all(i <= j for i, j in zip(I, J))
        if s.length:
            assert index_sets_to_shape(I, J) == s


def test_conjugate_involution():
    for p in enumerate_partitions(10):
        assert conjugate(conjugate(p)) == p
        assert conjugate(p).weight == p.weight


def test_enumeration_counts():
    assert list(enumerate_partitions(0)) == [P()]
    assert len(list(enumerate_partitions(3))) == 7
    assert len(list(enumerate_partitions(8))) == sum(gf_partition_counts(8)) == 67


def test_enumeration_matches_euler():
    gf = gf_partition_counts(20)
    assert partition_counts_euler(20) == gf
    for n in range(21):
        assert sum(1 for _ in partitions_of(n)) == gf[n]


def test_enumeration_order():
    assert [p.parts for p in enumerate_partitions(4)] == [
        (), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1),
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1),
    ]


def test_enumeration_unique():
    seen = list(enumerate_partitions(12))
    assert len(seen) == len(set(seen))


def test_skew_shapes_match_bruteforce():
    parts = list(enumerate_partitions(8))
    brute = {(lam, mu) for lam, mu in itertools.product(parts, parts)
             if len(mu) <= len(lam) and all(m <= l for m, l in zip(mu.parts, lam.parts))}
    got = [(s.outer, s.inner) for s in enumerate_skew_shapes(8)]
    assert len(got) == len(set(got))
    assert set(got) == brute


def test_partition_validation():
    assert P(2, 1, 0, 0).parts == (2, 1)
    with pytest.raises(ValueError):
        P(1, 2)
    with pytest.raises(ValueError):
        P(2, -1)
    with pytest.raises(ValueError):
        SkewShape(P(2), P(1, 1))


def test_parsing():
    assert parse_partition("[4,2,1]") == P(4, 2, 1)
    assert parse_partition("[]") == P()
    s = parse_shape("[4,2,1]/[2,1]")
    assert s.outer == P(4, 2, 1) and s.inner == P(2, 1)
    assert str(s) == "[4,2,1]/[2,1]"
    assert parse_index_list("1,2,5") == (1, 2, 5)
    assert parse_index_list("[3]") == (3,)


@pytest.mark.parametrize("text", ["4,2", "[4, 2]", "[2,3]", "[2]/", "[1]/[2]", "[a]"])
def test_parse_shape_rejects(text):
    with pytest.raises(ValueError):
        parse_shape(text)


@given(st.lists(st.integers(1, 12), min_size=1, max_size=5, unique=True).map(sorted),
       st.data())
def test_index_sets_inverse(I, data):
    I = tuple(I)
    r = len(I)
    J = tuple(sorted(data.draw(st.lists(st.integers(1, 14), min_size=r, max_size=r, unique=True))))
    s = index_sets_to_shape(I, J)
    if any(i > j for i, j in zip(I, J)):
        assert s is None
        return
    # stripping zero parts drops leading rows/cols where i_k = j_k = k
    I2, J2 = shape_to_index_sets(s)
    drop = r - s.length
    assert I[:drop] == J[:drop] == tuple(range(1, drop + 1))
    assert I[drop:] == tuple(i + drop for i in I2)
    assert J[drop:] == tuple(j + drop for j in J2)
