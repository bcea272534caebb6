from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from frolik_lab import EmptyClass, EventuallyPeriodicSet as EPS, exponent_frolik, shift_subset
from frolik_lab.residuation import frolik_iterates

EXAMPLE = EPS.finite({1, 5}) | EPS.progression(9, 2)


@st.composite
def eps(draw, max_t=12, max_p=6):
    t = draw(st.integers(0, max_t))
    p = draw(st.integers(1, max_p))
    exc = draw(st.frozensets(st.integers(0, max(t - 1, 0)), max_size=t)) if t else frozenset()
    res = draw(st.frozensets(st.integers(0, p - 1)))
    return (exc, t, p, res)


def raw_member(raw, n):
    exc, t, p, res = raw
    return n in exc if n < t else n % p in res


@given(eps())
def test_canonical_form_keeps_membership(raw):
    S = EPS(*raw)
    assert all((n in S) == raw_member(raw, n) for n in range(80))
    assert S.threshold <= raw[1] and raw[2] % S.period == 0


@given(eps(), eps())
def test_equality_is_structural(a, b):
    A, B = EPS(*a), EPS(*b)
    same = all(raw_member(a, n) == raw_member(b, n) for n in range(200))
    assert (A == B) == same


def test_canonical_examples():
    assert EPS(frozenset(), 0, 4, frozenset({1, 3})) == EPS(frozenset(), 0, 2, frozenset({1}))
    assert EXAMPLE.threshold == 8 and EXAMPLE.period == 2 and EXAMPLE.exceptional == {1, 5}
    assert EPS(frozenset({0, 2}), 4, 2, frozenset({0})) == EPS.progression(0, 2)
    with pytest.raises(ValueError):
        EPS(frozenset({5}), 3, 1, frozenset())


def brute_shift_subset(e, S, T):
    N = S.threshold + T.threshold + e + 4 * lcm(S.period, T.period)
    return all(s + e in T for s in range(N) if s in S)


@settings(max_examples=1000)
@given(st.integers(0, 20), eps(), eps())
def test_shift_subset_matches_brute_force(e, a, b):
    S, T = EPS(*a), EPS(*b)
    assert shift_subset(e, S, T) == brute_shift_subset(e, S, T)


def test_shift_subset_examples():
    evens = EPS.progression(0, 2)
    assert shift_subset(0, EXAMPLE, EXAMPLE)
    assert shift_subset(2, evens, evens)
    assert not shift_subset(1, EXAMPLE, EXAMPLE)


def test_set_operations():
    A = EPS.progression(3, 3)
    B = EPS.progression(0, 2)
    assert (A | B).elements_below(10) == [0, 2, 3, 4, 6, 8, 9]
    assert (A & B) == EPS.progression(6, 6)
    assert A & B <= A and A & B < A
    assert EPS.progression(5, 0) == EPS.finite({5})


def test_describe():
    assert EXAMPLE.describe() == "{1, 5} ∪ {9+2h | h >= 0}"
    assert EPS.progression(4, 2).describe("2^{{{}}}") == "{2^{4+2h} | h >= 0}"


def brute_frolik(E, allow_zero, bound=120):
    """Exponents below ``bound`` with e + E ⊆ E, checked on a long window."""
    big = E.threshold + bound + 8 * E.period
    members = [s for s in range(big) if s in E]
    low = 0 if allow_zero else 1
    return [e for e in range(low, bound) if all(s + e in E for s in members if s + e < big)]


@given(eps(max_t=10, max_p=4), st.booleans())
def test_exponent_frolik_matches_windowed_brute_force(raw, allow_zero):
    E = EPS(*raw)
    if E.is_empty():
        with pytest.raises(EmptyClass):
            exponent_frolik(E, allow_zero)
        return
    got = exponent_frolik(E, allow_zero)
    assert got.elements_below(60) == [e for e in brute_frolik(E, allow_zero) if e < 60]


def test_paper_iterates():
    f1, f2, f3 = frolik_iterates(EXAMPLE, 3)
    assert f1 == EPS.finite({4}) | EPS.progression(8, 2)
    assert f2 == EPS.progression(4, 2)
    assert f3 == EPS.progression(2, 2)
    assert f1 < f2 < f3


def test_paper_iterates_with_one_point_space():
    g1, g2 = frolik_iterates(EXAMPLE, 2, allow_zero=True)
    assert g1 == EPS.finite({0, 4}) | EPS.progression(8, 2)
    assert g2 == g1


def test_non_powers_of_two_never_qualify():
    # 2**1 is in the example class; n * 2 is a power of two only if n is.
    for n in range(3, 1000):
        if n & (n - 1):
            assert (2 * n) & (2 * n - 1)
