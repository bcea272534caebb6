"""Filter convergence, filter limit points, spectra and pseudospectra.

A point sequence is any sequence of point indices; an open-set sequence
is any sequence of nonempty open bitmasks of the space. In a finite space
every neighborhood of ``x`` contains the minimal neighborhood ``N(x)``, so
``s`` F-converges to ``x`` iff ``{i | s_i ∈ N(x)} ⊇ kernel(F)``, and ``x``
is an F-limit point of ``O`` iff ``{i | O_i ∩ N(x) ≠ ∅} ⊇ kernel(F)``.
"""

from functools import lru_cache
from itertools import product as cartesian

from .bits import is_subset, members, submasks
from .caps import resolve
from .errors import IndexMismatch, PointOutOfRange
from .filters import FilterFamily, check_index_size


def check_point_sequence(X, s):
    for i, v in enumerate(s):
        if not 0 <= v < X.point_count:
            raise PointOutOfRange(f"sequence value {v} at index {i} is not a point")


def check_open_sequence(X, os):
    for i, o in enumerate(os):
        if o == 0 or not X.is_open(o):
            raise ValueError(f"sequence entry {members(o)} at index {i} is not a nonempty open")


def _check_index(F, seq):
    if F.index_size != len(seq):
        raise IndexMismatch(f"filter over {F.index_size} indices, sequence of length {len(seq)}")


def hit_mask(X, s, x):
    """Indices ``i`` with ``s_i`` in the minimal neighborhood of ``x``."""
    n = X.minimal_neighborhoods()[x]
    mask = 0
    for i, v in enumerate(s):
        if n >> v & 1:
            mask |= 1 << i
    return mask


def meet_mask(X, os, x):
    """Indices ``i`` with ``O_i`` meeting the minimal neighborhood of ``x``."""
    n = X.minimal_neighborhoods()[x]
    mask = 0
    for i, o in enumerate(os):
        if o & n:
            mask |= 1 << i
    return mask


def f_converges(X, s, F, x):
    _check_index(F, s)
    X.check_point(x)
    check_point_sequence(X, s)
    return is_subset(F.kernel, hit_mask(X, s, x))


def f_limit_point(X, os, F, x):
    _check_index(F, os)
    X.check_point(x)
    check_open_sequence(X, os)
    return is_subset(F.kernel, meet_mask(X, os, x))


def _downsets(masks):
    kernels = set()
    for m in set(masks):
        kernels.update(submasks(m))
    return frozenset(kernels)


def spectrum(X, s, caps=None):
    """All filters over ``range(len(s))`` under which ``s`` converges in ``X``."""
    k = len(s)
    check_index_size(k)
    resolve(caps).check("filter_index", k)
    check_point_sequence(X, s)
    return FilterFamily(k, _downsets(hit_mask(X, s, x) for x in range(X.point_count)))


def pspectrum(X, os, caps=None):
    """All filters under which ``os`` has a limit point in ``X``."""
    k = len(os)
    check_index_size(k)
    resolve(caps).check("filter_index", k)
    check_open_sequence(X, os)
    return FilterFamily(k, _downsets(meet_mask(X, os, x) for x in range(X.point_count)))


def point_sequences(X, k):
    """All ``X``-valued sequences of length ``k``, index 0 most significant."""
    return cartesian(range(X.point_count), repeat=k)


def open_sequences(X, k):
    return cartesian(X.nonempty_opens, repeat=k)


def count_point_sequences(X, k):
    return X.point_count**k


def count_open_sequences(X, k):
    return len(X.nonempty_opens) ** k


@lru_cache(maxsize=4096)
def _space_spectra(Y, k):
    return frozenset(
        FilterFamily(k, _downsets(hit_mask(Y, s, y) for y in range(Y.point_count)))
        for s in point_sequences(Y, k)
    )


@lru_cache(maxsize=4096)
def _space_pspectra(Y, k):
    return frozenset(
        FilterFamily(k, _downsets(meet_mask(Y, os, y) for y in range(Y.point_count)))
        for os in open_sequences(Y, k)
    )


def class_spectrum(H, index_size, caps=None):
    """Distinct spectra of all ``index_size``-sequences over spaces in ``H``.

    Returns a frozenset of FilterFamily values; sort with
    ``FilterFamily.sort_key`` for reports.
    """
    check_index_size(index_size)
    c = resolve(caps)
    c.check("filter_index", index_size)
    out = set()
    for Y in H:
        c.check("sequences", count_point_sequences(Y, index_size))
        out |= _space_spectra(Y, index_size)
    return frozenset(out)


def class_pspectrum(H, index_size, caps=None):
    check_index_size(index_size)
    c = resolve(caps)
    c.check("filter_index", index_size)
    out = set()
    for Y in H:
        c.check("sequences", count_open_sequences(Y, index_size))
        out |= _space_pspectra(Y, index_size)
    return frozenset(out)


def sorted_spectra(spectra):
    return sorted(spectra, key=FilterFamily.sort_key)
