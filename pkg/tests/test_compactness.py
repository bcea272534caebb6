from itertools import combinations

import pytest

import oracles
from frolik_lab import (
    Caps,
    Filter,
    FilterFamily,
    SizeCapExceeded,
    all_families,
    discrete,
    enumerate_topologies,
    indiscrete,
    is_family_compact,
    is_family_pseudocompact,
    is_seq_compact,
    is_seq_pseudocompact,
    seq_compact_verdict,
    seq_pseudocompact_verdict,
)
from frolik_lab.bits import to_mask

SPACES = [X for n in range(4) for X in enumerate_topologies(n)]
FAMS1 = list(all_families(1))
FAMS2 = list(all_families(2))
WHOLE = FilterFamily.of(2, [[0, 1]])


def test_improper_always_compact():
    fam = FilterFamily.of(2, [[]])
    assert all(is_seq_compact(X, fam) for X in SPACES)
    assert all(is_seq_pseudocompact(X, fam) for X in SPACES)


@pytest.mark.parametrize("j", [0, 1])
def test_single_principal_ultrafilter_compact(j):
    fam = FilterFamily.of(2, [[j]])
    for X in SPACES:
        if X.point_count:
            assert is_seq_compact(X, fam)
            assert is_seq_pseudocompact(X, fam)


def test_discrete_not_whole_index_compact():
    v = seq_compact_verdict(discrete(2), WHOLE)
    assert not v.holds
    assert v.witness == (0, 1)
    pv = seq_pseudocompact_verdict(discrete(2), WHOLE)
    assert not pv.holds
    assert pv.witness == (to_mask({0}), to_mask({1}))


def test_empty_family():
    empty = FilterFamily.empty(2)
    assert is_seq_compact(discrete(0), empty)
    assert all(not is_seq_compact(X, empty) for X in SPACES if X.point_count)


def test_empty_space_pseudocompact_is_flagged_vacuous():
    v = seq_pseudocompact_verdict(discrete(0), WHOLE)
    assert v.holds and v.vacuous


def test_indiscrete_pseudocompact():
    for n in (1, 2, 3):
        for fam in FAMS2:
            if len(fam):
                assert is_seq_pseudocompact(indiscrete(n), fam)


@pytest.mark.parametrize("X", SPACES, ids=str)
def test_against_reverse_order_oracle(X):
    for k, fams in ((1, FAMS1), (2, FAMS2)):
        for fam in fams:
            assert is_seq_compact(X, fam) == oracles.seq_compact(X, k, fam.kernels)
            assert is_seq_pseudocompact(X, fam) == oracles.seq_pseudocompact(X, k, fam.kernels)


@pytest.mark.parametrize("X", SPACES, ids=str)
def test_monotone_in_family(X):
    for F in FAMS2:
        for G in FAMS2:
            if F.issubset(G):
                assert not is_seq_compact(X, F) or is_seq_compact(X, G)
                assert not is_seq_pseudocompact(X, F) or is_seq_pseudocompact(X, G)


def test_witness_is_least_failing_sequence():
    from frolik_lab.convergence import point_sequences

    for X in SPACES:
        for fam in FAMS2:
            v = seq_compact_verdict(X, fam)
            if not v.holds:
                first = next(s for s in point_sequences(X, 2)
                             if not oracles.seq_compact_single(X, s, fam.kernels))
                assert v.witness == first


def test_family_versions():
    assert all(is_family_compact(X, ()) for X in SPACES)
    assert all(is_family_pseudocompact(X, ()) for X in SPACES)
    imp = (FilterFamily.of(1, [[]]), FilterFamily.of(2, [[]]))
    assert all(is_family_compact(X, imp) for X in SPACES)
    assert all(is_family_pseudocompact(X, imp) for X in SPACES)
    assert not is_family_compact(discrete(2), (WHOLE,))
    assert not is_family_pseudocompact(discrete(2), (WHOLE,))
    for X in SPACES:
        for F in FAMS2:
            assert is_family_compact(X, (F,)) == is_seq_compact(X, F)
            assert is_family_pseudocompact(X, (F,)) == is_seq_pseudocompact(X, F)
        for F, G in combinations(FAMS1, 2):
            assert is_family_compact(X, (F, G)) == (is_seq_compact(X, F) and is_seq_compact(X, G))


def test_sequence_cap():
    fam = FilterFamily.of(4, [[0]])
    with pytest.raises(SizeCapExceeded):
        is_seq_compact(discrete(10), fam, Caps(sequences=1000))
    with pytest.raises(SizeCapExceeded):
        is_seq_pseudocompact(discrete(4), fam, Caps(sequences=1000))
