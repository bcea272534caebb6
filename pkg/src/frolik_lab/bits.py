"""Small helpers for subsets of ``range(n)`` stored as int bitmasks."""

from itertools import combinations


def to_mask(elements):
    mask = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e}")
        mask |= 1 << e
    return mask


def members(mask):
    """Sorted tuple of the elements of ``mask``."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask):
    return bin(mask).count("1")


def full_mask(n):
    return (1 << n) - 1


def is_subset(a, b):
    return a & ~b == 0


def submasks(mask):
    """Every submask of ``mask``, ordered by size then lexicographically."""
    elems = members(mask)
    for k in range(len(elems) + 1):
        for combo in combinations(elems, k):
            yield to_mask(combo)


def mask_key(mask):
    """Sort key ordering masks by their sorted element lists."""
    return members(mask)
