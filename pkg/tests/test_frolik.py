from functools import partial

import numpy as np
import pytest

from frolik_lab import (
    FilterFamily,
    SizeCapExceeded,
    SpaceUniverse,
    SwpcInstance,
    all_families,
    check_ultrafilter_preservation,
    class_spectrum,
    construct_Q,
    discrete,
    enumerate_filters,
    enumerate_topologies,
    frolik_member,
    indiscrete,
    is_frolik_for,
    is_seq_compact,
    q_member,
    sierpinski,
    swpc_predicates,
)
from frolik_lab.sampling import random_family, random_topology
from frolik_lab.verification import universes

SPACES = [X for n in range(4) for X in enumerate_topologies(n)]
FAMS2 = list(all_families(2))
POOL = (discrete(2), sierpinski(), indiscrete(2))
UNIVERSES = list(universes(POOL, (1, 2)))
ULTRA = FilterFamily.of(2, [[0], [1]])
WITH_IMPROPER = FilterFamily.of(2, [[], [0], [1]])


def test_frolik_for_empty_universe():
    K = partial(is_seq_compact, family=FilterFamily.of(2, [[0, 1]]))
    assert all(is_frolik_for(X, K, SpaceUniverse()) for X in SPACES)


def test_frolik_for_improper_class():
    K = partial(is_seq_compact, family=FilterFamily.of(2, [[]]))
    for X in SPACES[::4]:
        for H in UNIVERSES:
            assert is_frolik_for(X, K, H)


def test_frolik_for_ultrafilter_family():
    # Every nonempty product is ULTRA-compact (take x = x_j), so the
    # verdict is true whenever the universe has nonempty spaces.
    K = partial(is_seq_compact, family=ULTRA)
    assert is_frolik_for(discrete(2), K, SpaceUniverse((discrete(2),)))


def test_frolik_for_whole_index_family():
    K = partial(is_seq_compact, family=FilterFamily.of(2, [[0, 1]]))
    assert not is_frolik_for(discrete(2), K, SpaceUniverse((indiscrete(2),)))
    assert is_frolik_for(indiscrete(3), K, SpaceUniverse((indiscrete(2),)))


def test_universe_product_cap():
    with pytest.raises(SizeCapExceeded):
        SpaceUniverse((indiscrete(9), indiscrete(8)))


def test_swpc_improper_all_true():
    for X in SPACES[::5]:
        for H in UNIVERSES:
            assert swpc_predicates(SwpcInstance(X, WITH_IMPROPER, H)) == (True,) * 7


def test_swpc_empty_universe_all_true():
    for X in SPACES[::3]:
        for F in FAMS2:
            assert swpc_predicates(SwpcInstance(X, F, SpaceUniverse())) == (True,) * 7


def test_swpc_random_instances_agree():
    for seed in range(60):
        rng = np.random.default_rng([seed, 99])
        X = random_topology(rng, int(rng.integers(0, 4)))
        H = SpaceUniverse(tuple(random_topology(rng, int(rng.integers(1, 3)))
                                for _ in range(int(rng.integers(1, 3)))))
        values = swpc_predicates(SwpcInstance(X, random_family(rng, 2), H))
        assert len(set(values)) == 1, values


def test_swpc_has_false_instances():
    inst = SwpcInstance(discrete(2), FilterFamily.of(2, [[0, 1]]), SpaceUniverse((indiscrete(2),)))
    assert swpc_predicates(inst) == (False,) * 7


def test_swpc_fault_override():
    inst = SwpcInstance(discrete(1), WITH_IMPROPER, SpaceUniverse((discrete(2),)))
    values = swpc_predicates(inst, faults={7: lambda i: False})
    assert values == (True,) * 6 + (False,)


def test_construct_q_examples():
    fam = FilterFamily.of(2, [[0], [1], []])
    assert construct_Q((), SpaceUniverse((discrete(2),))) == ()
    assert construct_Q((fam,), SpaceUniverse()) == ()
    spectra = class_spectrum(SpaceUniverse((discrete(2),)), 2)
    assert spectra == {enumerate_filters(2), fam}
    assert construct_Q((fam,), SpaceUniverse((discrete(2),))) == (fam,)


def test_construct_q_mixed_index_sizes():
    f1 = FilterFamily.of(1, [[0]])
    f2 = FilterFamily.of(2, [[0, 1]])
    Q = construct_Q((f1, f2), SpaceUniverse((discrete(2),)))
    assert {q.index_size for q in Q} == {1, 2}
    assert FilterFamily.empty(2) in Q


def test_ultrafilter_preservation_examples():
    for H in UNIVERSES:
        assert check_ultrafilter_preservation((ULTRA,), H)
        assert check_ultrafilter_preservation((WITH_IMPROPER,), H)
        assert all(q.issubset(ULTRA) for q in construct_Q((ULTRA,), H))


def test_ultrafilter_preservation_exhaustive():
    fams = FAMS2 + list(all_families(1))
    for H in UNIVERSES:
        for f in fams:
            assert check_ultrafilter_preservation((f,), H)
            assert check_ultrafilter_preservation((f,), H, pseudo=True)


@pytest.mark.parametrize("pseudo", [False, True])
def test_membership_is_intersection_over_entries(pseudo):
    fams = FAMS2[::3] + list(all_families(1))
    for X in SPACES[::2]:
        for H in UNIVERSES[::2]:
            for a in fams:
                for b in fams[::2]:
                    both = frolik_member(X, (a, b), H, pseudo)
                    assert both == (frolik_member(X, (a,), H, pseudo)
                                    and frolik_member(X, (b,), H, pseudo))


@pytest.mark.parametrize("pseudo", [False, True])
def test_definition_matches_constructed_q(pseudo):
    for X in SPACES:
        for H in UNIVERSES:
            for F in FAMS2[::3]:
                assert frolik_member(X, (F,), H, pseudo) == q_member(X, (F,), H, pseudo)
