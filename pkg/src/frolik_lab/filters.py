"""Filters over finite index sets and families of them.

Over a finite set every filter is principal, so a filter is stored as
its kernel: ``A`` belongs to the filter iff ``kernel ⊆ A``. The empty
kernel is the improper filter (the whole power set).
"""

from dataclasses import dataclass
from enum import Enum

from .bits import full_mask, is_subset, mask_key, members, popcount, to_mask
from .caps import resolve
from .errors import IndexMismatch, InvalidIndexSize, PointOutOfRange


def check_index_size(k):
    if k < 1:
        raise InvalidIndexSize(f"index set must be nonempty, got size {k}")


class FilterKind(str, Enum):
    IMPROPER = "improper"
    PRINCIPAL_ULTRAFILTER = "principal_ultrafilter"
    PRINCIPAL_PROPER_NONULTRA = "principal_proper_nonultra"


@dataclass(frozen=True, order=False)
class Filter:
    index_size: int
    kernel: int

    def __post_init__(self):
        check_index_size(self.index_size)
        if not is_subset(self.kernel, full_mask(self.index_size)):
            raise PointOutOfRange(
                f"kernel {members(self.kernel)} not inside index set of size {self.index_size}"
            )

    @classmethod
    def up(cls, index_size, elements=()):
        """The filter of all supersets of ``elements``."""
        return cls(index_size, to_mask(elements))

    @classmethod
    def improper(cls, index_size):
        return cls(index_size, 0)

    @property
    def kernel_set(self):
        return members(self.kernel)

    def __contains__(self, subset):
        return filter_member(self, subset)

    def __repr__(self):
        return f"up({self.index_size}, {set(self.kernel_set) or '{}'})"


def filter_member(F, subset):
    mask = subset if isinstance(subset, int) else to_mask(subset)
    if not is_subset(mask, full_mask(F.index_size)):
        raise IndexMismatch(f"set {members(mask)} is not a subset of I (|I| = {F.index_size})")
    return is_subset(F.kernel, mask)


def classify(F):
    n = popcount(F.kernel)
    if n == 0:
        return FilterKind.IMPROPER
    if n == 1:
        return FilterKind.PRINCIPAL_ULTRAFILTER
    return FilterKind.PRINCIPAL_PROPER_NONULTRA


@dataclass(frozen=True)
class FilterFamily:
    """A set of filters over one index set, held as a frozenset of kernels."""

    index_size: int
    kernels: frozenset

    def __post_init__(self):
        check_index_size(self.index_size)
        ks = frozenset(self.kernels)
        full = full_mask(self.index_size)
        for k in ks:
            if not is_subset(k, full):
                raise PointOutOfRange(
                    f"kernel {members(k)} not inside index set of size {self.index_size}"
                )
        object.__setattr__(self, "kernels", ks)

    @classmethod
    def of(cls, index_size, filters):
        """Build from Filter objects or kernel element lists."""
        kernels = set()
        for f in filters:
            if isinstance(f, Filter):
                if f.index_size != index_size:
                    raise IndexMismatch(f"filter over {f.index_size} in family over {index_size}")
                kernels.add(f.kernel)
            else:
                kernels.add(to_mask(f))
        return cls(index_size, frozenset(kernels))

    @classmethod
    def empty(cls, index_size):
        return cls(index_size, frozenset())

    def __iter__(self):
        for k in self.sorted_kernels():
            yield Filter(self.index_size, k)

    def __len__(self):
        return len(self.kernels)

    def __contains__(self, F):
        return F.index_size == self.index_size and F.kernel in self.kernels

    def __and__(self, other):
        return intersect_families(self, other)

    def issubset(self, other):
        return self.index_size == other.index_size and self.kernels <= other.kernels

    def sorted_kernels(self):
        return sorted(self.kernels, key=mask_key)

    def sort_key(self):
        return (self.index_size, tuple(mask_key(k) for k in self.sorted_kernels()))

    def __repr__(self):
        body = ", ".join(repr(f) for f in self)
        return f"FilterFamily({self.index_size}: {body})"


def enumerate_filters(index_size, caps=None):
    """All ``2**index_size`` filters over the index set, improper included."""
    check_index_size(index_size)
    resolve(caps).check("filter_index", index_size)
    return FilterFamily(index_size, frozenset(range(1 << index_size)))


def all_families(index_size, caps=None):
    """Every family of filters over the index set (``2**2**k`` of them)."""
    kernels = enumerate_filters(index_size, caps).sorted_kernels()
    for bits in range(1 << len(kernels)):
        yield FilterFamily(
            index_size, frozenset(k for j, k in enumerate(kernels) if bits >> j & 1)
        )


def intersect_families(F, G):
    if F.index_size != G.index_size:
        raise IndexMismatch(f"cannot intersect families over {F.index_size} and {G.index_size}")
    return FilterFamily(F.index_size, F.kernels & G.kernels)


def is_ultrafilter_family(F):
    return all(popcount(k) == 1 for k in F.kernels)


# Families of families are plain tuples of FilterFamily values; each
# entry carries its own index size.
