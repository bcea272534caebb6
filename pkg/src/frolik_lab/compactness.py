"""Sequencewise compactness and pseudocompactness by exhaustive search."""

from dataclasses import dataclass
from functools import lru_cache

from .bits import is_subset
from .caps import resolve
from .convergence import (
    count_open_sequences,
    count_point_sequences,
    hit_mask,
    meet_mask,
    open_sequences,
    point_sequences,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a search.

    ``witness`` is the lexicographically least failing sequence (point
    indices, or open bitmasks for the pseudocompact searches) when
    ``holds`` is false. ``vacuous`` flags a search that had no sequences
    to look at.
    """

    holds: bool
    witness: tuple = None
    vacuous: bool = False

    def __bool__(self):
        return self.holds


def _some_kernel_below(kernels, masks):
    return any(is_subset(k, m) for m in masks for k in kernels)


@lru_cache(maxsize=1 << 16)
def _seq_compact(X, family):
    kernels = family.kernels
    if 0 in kernels and X.point_count:
        return Verdict(True)
    points = range(X.point_count)
    for s in point_sequences(X, family.index_size):
        if not _some_kernel_below(kernels, [hit_mask(X, s, x) for x in points]):
            return Verdict(False, tuple(s))
    return Verdict(True, vacuous=X.point_count == 0)


@lru_cache(maxsize=1 << 16)
def _seq_pseudocompact(X, family):
    if not X.nonempty_opens:
        return Verdict(True, vacuous=True)
    kernels = family.kernels
    if 0 in kernels:
        return Verdict(True)
    points = range(X.point_count)
    for os in open_sequences(X, family.index_size):
        if not _some_kernel_below(kernels, [meet_mask(X, os, x) for x in points]):
            return Verdict(False, tuple(os))
    return Verdict(True)


def seq_compact_verdict(X, family, caps=None):
    resolve(caps).check("sequences", count_point_sequences(X, family.index_size))
    return _seq_compact(X, family)


def seq_pseudocompact_verdict(X, family, caps=None):
    resolve(caps).check("sequences", count_open_sequences(X, family.index_size))
    return _seq_pseudocompact(X, family)


def is_seq_compact(X, family, caps=None):
    """Every point sequence over the index set converges for some member."""
    return seq_compact_verdict(X, family, caps).holds


def is_seq_pseudocompact(X, family, caps=None):
    """Every sequence of nonempty opens has a limit point for some member.

    The empty space has no such sequences and is vacuously
    pseudocompact; :func:`seq_pseudocompact_verdict` flags this case.
    """
    return seq_pseudocompact_verdict(X, family, caps).holds


def is_family_compact(X, families, caps=None):
    return all(is_seq_compact(X, f, caps) for f in families)


def is_family_pseudocompact(X, families, caps=None):
    return all(is_seq_pseudocompact(X, f, caps) for f in families)
