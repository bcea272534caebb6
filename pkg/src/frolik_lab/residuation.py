"""Residuation and the Frolík operator on finite magmas, plus the
cardinality-exponent model of spaces.

A class of elements is a frozenset of element indices. Internally classes
are boolean vectors so that ``table`` lookups vectorize.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import EmptyClass
from .periodic import EventuallyPeriodicSet, shift_subset


@dataclass(frozen=True, eq=False)
class FiniteMagma:
    """A binary operation on ``range(size)`` given by its Cayley table."""

    size: int
    table: np.ndarray = field(repr=False)

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64).reshape(self.size, self.size)
        if t.size and (t.min() < 0 or t.max() >= self.size):
            raise ValueError("table entries must be elements of the magma")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @classmethod
    def cyclic(cls, n):
        """Addition modulo ``n``."""
        i = np.arange(n)
        return cls(n, (i[:, None] + i[None, :]) % n)

    def op(self, x, y):
        return int(self.table[x, y])

    def is_associative(self):
        return self._associative

    def identity(self):
        """An identity element, or ``None``."""
        return self._identity

    @cached_property
    def _associative(self):
        t = self.table
        return bool(np.array_equal(t[t, :], t[:, t]))

    @cached_property
    def _identity(self):
        idx = np.arange(self.size)
        for e in range(self.size):
            if np.array_equal(self.table[e], idx) and np.array_equal(self.table[:, e], idx):
                return e
        return None

    def __eq__(self, other):
        return isinstance(other, FiniteMagma) and self.size == other.size and np.array_equal(
            self.table, other.table)

    def __hash__(self):
        return hash((self.size, self.table.tobytes()))


def _vec(M, K):
    v = np.zeros(M.size, dtype=bool)
    v[list(K)] = True
    return v


def _cls(v):
    return frozenset(int(i) for i in np.flatnonzero(v))


def _residuate_vec(M, k, h):
    return (k[M.table] | ~h[None, :]).all(axis=1)


def residuate(M, K, H):
    """``{x | x*y ∈ K for every y ∈ H}``."""
    return _cls(_residuate_vec(M, _vec(M, K), _vec(M, H)))


def frolik_op(M, K):
    return residuate(M, K, K)


def is_closed(M, K):
    k = _vec(M, K)
    return bool(k[M.table[np.ix_(k, k)]].all())


def is_factor_closed(M, K):
    """``x*y ∈ K`` forces ``x ∈ K``."""
    k = _vec(M, K)
    return bool((~k[M.table] | k[:, None]).all())


@dataclass(frozen=True)
class Clause:
    hypothesis: bool
    conclusion: bool

    @property
    def holds(self):
        return not self.hypothesis or self.conclusion


@dataclass(frozen=True)
class EasyReport:
    """Checks of the four basic properties of the Frolík operator.

    (a) ``F(K) ⊇ K`` iff ``K`` is closed; checked as a biconditional.
    (b) nonempty factor-closed ``K`` gives ``F(K) ⊆ K``.
    (c) associativity gives ``F(K)`` closed and ``F(F(K)) ⊇ F(K)``.
    (d) an identity gives ``F(F(K)) ⊆ F(K)``.
    """

    a: Clause
    b: Clause
    c: Clause
    d: Clause

    @property
    def a_holds(self):
        return self.a.hypothesis == self.a.conclusion

    def violations(self):
        out = [] if self.a_holds else ["a"]
        out += [name for name in "bcd" if not getattr(self, name).holds]
        return out

    @property
    def ok(self):
        return not self.violations()


def check_prop_easy(M, K):
    K = frozenset(K)
    k = _vec(M, K)
    fk = _residuate_vec(M, k, k)
    ffk = _residuate_vec(M, fk, fk)
    fk_cls = _cls(fk)
    return EasyReport(
        a=Clause(is_closed(M, K), bool((fk | ~k).all())),
        b=Clause(bool(K) and is_factor_closed(M, K), bool((k | ~fk).all())),
        c=Clause(M.is_associative(), is_closed(M, fk_cls) and bool((ffk | ~fk).all())),
        d=Clause(M.identity() is not None, bool((fk | ~ffk).all())),
    )


def exponent_frolik(E, allow_zero=False):
    """Frolík class of a cardinality class, on exponents.

    ``E`` is the set of exponents ``e`` such that the class ``K`` consists
    of the spaces of cardinality ``2**e``. Cardinalities multiply under
    products, so a space of size ``2**e`` is in ``F(K)`` iff ``e + E ⊆ E``.
    A space whose size is not a power of two never is: its product with a
    member of ``K`` is not a power of two either. ``allow_zero`` admits the
    one-point space (exponent 0), i.e. works over all spaces instead of
    spaces with at least two points. The empty space never qualifies since
    ``K`` is nonempty.
    """
    if E.is_empty():
        raise EmptyClass("the exponent set must be nonempty")
    low = 0 if allow_zero else 1
    t = max(E.threshold, low)
    return EventuallyPeriodicSet.from_predicate(
        lambda e: e >= low and shift_subset(e, E, E), t, E.period
    )


def frolik_iterates(E, times, allow_zero=False):
    out = []
    for _ in range(times):
        E = exponent_frolik(E, allow_zero)
        out.append(E)
    return out
