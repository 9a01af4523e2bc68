from math import factorial

import pytest
from hypothesis import given, strategies as st

from genjack.partitions import (Box, arm, boxes, format_mp, heights, hook, leg, length,
                                multipartitions, parse, partition, partitions, size, sort_key,
                                sym_factor, transpose, transpose_all)

partition_st = st.lists(st.integers(1, 6), max_size=6).map(lambda v: tuple(sorted(v, reverse=True)))
mp_st = st.integers(1, 3).flatmap(lambda r: st.tuples(*[partition_st] * r))


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_multipartition_counts():
    # coefficients of prod_k (1 - q^k)^{-2}
    assert [len(multipartitions(n, 2)) for n in range(9)] == [1, 2, 5, 10, 20, 36, 65, 110, 185]
    assert [len(multipartitions(n, 3)) for n in range(5)] == [1, 3, 9, 22, 51]


def test_reverse_lex_order():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_multipartition_display_order():
    assert multipartitions(1, 2) == [((), (1,)), ((1,), ())]
    assert multipartitions(2, 2) == [((), (1, 1)), ((), (2,)), ((1,), (1,)), ((1, 1), ()), ((2,), ())]


def test_validation():
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, 0])
    with pytest.raises(ValueError):
        parse("[1],[2")


@given(partition_st)
def test_transpose_is_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert sum(transpose(lam)) == sum(lam)


@given(mp_st)
def test_parse_round_trip(mp):
    assert parse(format_mp(mp)) == mp


@given(mp_st)
def test_boxes_weights_weakly_decrease(mp):
    # restricted weights u_k + c t1 weakly decrease when u_1 >> u_2 >> ... >> t1 > 0
    seq = [(-b.component, b.content) for b in boxes(mp)]
    assert seq == sorted(seq, reverse=True)
    assert len(seq) == size(mp)


@given(mp_st)
def test_equal_weights_are_contiguous(mp):
    seen, last = set(), None
    for b in boxes(mp):
        key = (b.component, b.content)
        if key != last:
            assert key not in seen
            seen.add(key)
        last = key


@given(mp_st)
def test_sym_factor_from_heights(mp):
    out = 1
    for h in heights(mp).values():
        out *= factorial(h)
    assert sym_factor(mp) == out


def test_reference_box_order():
    order = boxes(((2, 1),))
    assert order == [Box(0, 1, 0), Box(0, 0, 0), Box(0, 0, 1)]
    assert Box(0, 2, 1).content == 1


@given(partition_st)
def test_hook_lengths_sum(lam):
    # sum of hook lengths = n(lam) + n(lam') + |lam|
    n_lam = sum(i * v for i, v in enumerate(lam))
    n_t = sum(i * v for i, v in enumerate(transpose(lam)))
    total = sum(sum(hook(lam, (x, y))) for y, row in enumerate(lam) for x in range(row))
    assert total == n_lam + n_t + sum(lam)


def test_arm_leg_outside():
    assert arm((2,), (0, 1)) == -1
    assert leg((2,), (1, 0)) == 0
    assert leg((), (0, 0)) == -1
    with pytest.raises(ValueError):
        hook((1,), (1, 0))


def test_misc():
    assert length(((2, 1), (), (3,))) == 3
    assert transpose_all(((2,), (1, 1))) == ((1, 1), (2,))
    assert sort_key(((1,), ())) < sort_key(((), (1, 1)))
