"""Seeded random instances.

Each instance draws from its own generator keyed by ``(seed, ordinal)``,
so the sampled instances do not depend on scheduling or worker count.
"""

import numpy as np

from .bits import full_mask
from .filters import FilterFamily
from .topology import FiniteSpace, union_closure


def rng_for(seed, ordinal):
    return np.random.default_rng([seed, ordinal])


def random_mask(rng, n):
    return int(rng.integers(0, 1 << n)) if n else 0


def random_topology(rng, n):
    """Topology generated by a random subbase of up to ``n + 1`` sets."""
    full = full_mask(n)
    subbase = [random_mask(rng, n) for _ in range(int(rng.integers(0, n + 2)))]
    basis = {full}
    for s in subbase:
        basis |= {b & s for b in basis}
    return FiniteSpace(n, tuple(union_closure(basis) | {full}))


def random_family(rng, index_size):
    kernels = [k for k in range(1 << index_size) if rng.random() < 0.5]
    return FilterFamily(index_size, frozenset(kernels))


def random_table(rng, size):
    return rng.integers(0, size, size=(size, size))
