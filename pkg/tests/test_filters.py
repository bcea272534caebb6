from itertools import product

import pytest

import oracles
from frolik_lab import (
    Filter,
    FilterFamily,
    FilterKind,
    IndexMismatch,
    InvalidIndexSize,
    SizeCapExceeded,
    all_families,
    classify,
    enumerate_filters,
    filter_member,
    intersect_families,
)


def up(k, *elems):
    return Filter.up(k, elems)


def test_membership_examples():
    assert filter_member(up(2, 0), {0, 1})
    assert not filter_member(up(2, 0, 1), {0})
    assert filter_member(Filter.improper(2), set())
    assert {0, 1} in up(2, 1)


def test_membership_rejects_foreign_sets():
    with pytest.raises(IndexMismatch):
        filter_member(up(2, 0), {3})


@pytest.mark.parametrize("k", [1, 2, 3])
def test_membership_matches_upset(k):
    for kern in range(1 << k):
        fam = oracles.upset(k, kern)
        for a in range(1 << k):
            assert filter_member(Filter(k, kern), a) == (a in fam)


@pytest.mark.parametrize("k, count", [(1, 2), (2, 4), (3, 8), (4, 16)])
def test_enumerate_filters_count(k, count):
    fam = enumerate_filters(k)
    assert len(fam) == count
    kinds = [classify(F) for F in fam]
    assert kinds.count(FilterKind.PRINCIPAL_ULTRAFILTER) == k
    assert kinds.count(FilterKind.IMPROPER) == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_enumerate_filters_matches_naive_oracle(k):
    naive = oracles.naive_filters(k)
    assert len(naive) == 1 << k
    assert {oracles.kernel_of(f) for f in naive} == enumerate_filters(k).kernels
    for f in naive:
        assert oracles.upset(k, oracles.kernel_of(f)) == f


def test_enumerate_filters_caps():
    with pytest.raises(SizeCapExceeded):
        enumerate_filters(5)
    with pytest.raises(InvalidIndexSize):
        enumerate_filters(0)


def test_classify_examples():
    assert classify(Filter.improper(3)) is FilterKind.IMPROPER
    assert classify(up(3, 2)) is FilterKind.PRINCIPAL_ULTRAFILTER
    assert classify(up(3, 0, 1)) is FilterKind.PRINCIPAL_PROPER_NONULTRA


def test_filter_equality():
    assert up(2, 1) == Filter(2, 0b10)
    assert up(2, 1) != up(3, 1)


def test_intersect_examples():
    F = FilterFamily.of(2, [up(2, 0), up(2, 1)])
    G = FilterFamily.of(2, [up(2, 1), up(2, 0, 1)])
    assert intersect_families(F, G) == FilterFamily.of(2, [up(2, 1)])
    assert F & F == F
    assert len(F & FilterFamily.empty(2)) == 0
    with pytest.raises(IndexMismatch):
        intersect_families(F, FilterFamily.empty(3))


def test_intersection_laws_exhaustive():
    fams = list(all_families(2))
    assert len(fams) == 16
    for F, G in product(fams, repeat=2):
        assert F & G == G & F
        assert F & F == F
        for H in fams:
            assert (F & G) & H == F & (G & H)


def test_intersection_laws_index_three_sampled():
    fams = list(all_families(3))[::7]
    for F, G, H in product(fams[:12], repeat=3):
        assert (F & G) & H == F & (G & H)
        assert F & G == G & F


def test_family_iteration_is_sorted():
    F = FilterFamily.of(2, [[1], [], [0, 1], [0]])
    assert [f.kernel_set for f in F] == [(), (0,), (0, 1), (1,)]


def test_family_rejects_mixed_index_sizes():
    with pytest.raises(IndexMismatch):
        FilterFamily.of(2, [up(3, 0)])
