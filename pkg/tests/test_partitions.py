"""Partition combinatorics."""

from fractions import Fraction

from jsbo.partitions import (
    conjugate,
    dominates,
    hook_product_alpha,
    pad,
    partitions_of,
    partitions_upto,
    trim,
)


def test_partitions_of_counts():
    # partitions of 6 into at most 3 rows
    got = partitions_of(6, 3)
    assert len(got) == 7
    assert all(sum(m) == 6 and len(m) <= 3 for m in got)
    assert all(all(a >= b for a, b in zip(m, m[1:])) for m in got)
    # no rows at all only fits weight zero
    assert partitions_of(0, 2) == [()] or partitions_of(0, 2) == [(0, 0)]
    assert partitions_of(3, 1) == [(3,)]


def test_partitions_upto_is_graded_union():
    ms = partitions_upto(2, 4)
    assert len(ms) == len(set(ms))
    for w in range(5):
        expect = {trim(m) for m in partitions_of(w, 2)}
        assert {trim(m) for m in ms if sum(m) == w} == expect


def test_trim_pad_conjugate():
    assert trim((3, 1, 0, 0)) == (3, 1)
    assert pad((3, 1), 4) == (3, 1, 0, 0)
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((4, 2, 1))) == (4, 2, 1)
    assert conjugate(()) == ()


def test_dominance_order():
    # containment-style comparisons used by the triangular solves
    assert dominates((2,), (1, 1))
    assert not dominates((1, 1), (2,))
    assert dominates((3, 1), (2, 2))
    assert dominates((2, 2), (2, 2))
    # incomparable pair of weight 6
    assert not dominates((4, 1, 1), (3, 3)) or not dominates((3, 3), (4, 1, 1))


def test_hook_products():
    for num, den in ((2, 1), (1, 1), (1, 2)):
        for m in ((2, 1), (3,), (2, 2, 1)):
            up, low = hook_product_alpha(m, num, den)
            assert up > 0 and low > 0
    # alpha=1 collapses both products to the classical hook product
    up, low = hook_product_alpha((2, 1), 1, 1)
    assert up == low == 3
    up, low = hook_product_alpha((3,), 1, 1)
    assert up == low == 6
