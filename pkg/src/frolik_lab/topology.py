"""Finite topological spaces on the points ``0..n-1``.

Open sets are int bitmasks. A space is fully described by its minimal
neighborhoods (the intersection of all opens containing a point), which
are computed once at construction and used by every convergence test.
"""

from dataclasses import dataclass, field
from itertools import permutations, product as cartesian

from .bits import full_mask, is_subset, mask_key, members, to_mask
from .caps import resolve
from .errors import (
    BadArity,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    PointOutOfRange,
)


@dataclass(frozen=True)
class FiniteSpace:
    """A topology on ``point_count`` points.

    ``opens`` is a sorted tuple of bitmasks. The constructor trusts its
    input; use :func:`validate_topology` for unchecked families.
    """

    point_count: int
    opens: tuple
    _nbhds: tuple = field(init=False, repr=False, compare=False)
    _open_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        opens = tuple(sorted(set(self.opens)))
        object.__setattr__(self, "opens", opens)
        object.__setattr__(self, "_open_set", frozenset(opens))
        full = self.full
        nbhds = []
        for x in range(self.point_count):
            bit = 1 << x
            n = full
            for o in opens:
                if o & bit:
                    n &= o
            nbhds.append(n)
        object.__setattr__(self, "_nbhds", tuple(nbhds))

    @property
    def full(self):
        return full_mask(self.point_count)

    @property
    def nonempty_opens(self):
        return self.opens[1:] if self.opens and self.opens[0] == 0 else self.opens

    def is_open(self, mask):
        return mask in self._open_set

    def check_point(self, x):
        if not 0 <= x < self.point_count:
            raise PointOutOfRange(f"point {x} not in a space of {self.point_count} points")

    def minimal_neighborhoods(self):
        return self._nbhds

    def open_sets(self):
        """The opens as sorted point tuples, in a stable order."""
        return sorted((members(o) for o in self.opens), key=lambda s: (len(s), s))

    def __str__(self):
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.open_sets())
        return f"FiniteSpace({self.point_count}; {body})"


def validate_topology(point_count, candidate_opens):
    """Check the topology axioms and build a space.

    ``candidate_opens`` may hold bitmasks or iterables of points.
    """
    full = full_mask(point_count)
    masks = set()
    for c in candidate_opens:
        m = c if isinstance(c, int) else to_mask(c)
        if not is_subset(m, full):
            raise PointOutOfRange(f"set {members(m)} is not inside {point_count} points")
        masks.add(m)
    if 0 not in masks or full not in masks:
        raise MissingEmptyOrFull("opens must contain the empty set and the full set")
    ordered = sorted(masks, key=mask_key)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in masks:
                raise NotClosedUnderUnion(set(members(a)), set(members(b)))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a & b not in masks:
                raise NotClosedUnderIntersection(set(members(a)), set(members(b)))
    return FiniteSpace(point_count, tuple(masks))


def union_closure(basis):
    """All unions of subfamilies of ``basis`` (the empty union included)."""
    opens = {0}
    for b in set(basis):
        opens |= {o | b for o in opens}
    return opens


def from_minimal_neighborhoods(nbhds):
    """Space whose minimal neighborhoods are ``nbhds`` (a valid preorder)."""
    return FiniteSpace(len(nbhds), tuple(union_closure(nbhds)))


def discrete(n):
    return from_minimal_neighborhoods([1 << x for x in range(n)])


def indiscrete(n):
    return FiniteSpace(n, (0, full_mask(n)))


def sierpinski():
    """Two points; ``{1}`` is the only nontrivial open."""
    return FiniteSpace(2, (0, 0b10, 0b11))


def make_standard(kind, point_count):
    if kind == "discrete":
        return discrete(point_count)
    if kind == "indiscrete":
        return indiscrete(point_count)
    if kind == "sierpinski":
        if point_count != 2:
            raise BadArity(f"sierpinski space has 2 points, not {point_count}")
        return sierpinski()
    raise ValueError(f"unknown standard space {kind!r}")


def pair_index(x, y, right_count):
    return x * right_count + y


def split_index(p, right_count):
    return divmod(p, right_count)


def rectangle(u, v, right_count):
    """Bitmask of ``U x V`` in the product point encoding."""
    mask = 0
    for x in members(u):
        mask |= v << (x * right_count)
    return mask


def product(X, Y, caps=None):
    """Product space; the point ``(x, y)`` is encoded as ``x * |Y| + y``."""
    n = X.point_count * Y.point_count
    resolve(caps).check("product_points", n)
    m = Y.point_count
    basis = [
        rectangle(nx, ny, m)
        for nx in X.minimal_neighborhoods()
        for ny in Y.minimal_neighborhoods()
    ]
    return FiniteSpace(n, tuple(union_closure(basis)))


def minimal_neighborhood(X, x):
    X.check_point(x)
    return X.minimal_neighborhoods()[x]


def enumerate_topologies(n, caps=None):
    """Yield every labeled topology on ``n`` points exactly once.

    Topologies on a finite set correspond to preorders, so this walks
    all assignments of candidate minimal neighborhoods ``N(x) ∋ x`` and
    keeps the transitive ones (``y ∈ N(x)`` implies ``N(y) ⊆ N(x)``).
    """
    resolve(caps).check("enumerate_points", n)
    choices = []
    for x in range(n):
        others = [y for y in range(n) if y != x]
        opts = []
        for bits in range(1 << len(others)):
            mask = 1 << x
            for j, y in enumerate(others):
                if bits >> j & 1:
                    mask |= 1 << y
            opts.append(mask)
        choices.append(opts)
    for nbhds in cartesian(*choices):
        if all(
            is_subset(nbhds[y], nbhds[x])
            for x in range(n)
            for y in members(nbhds[x])
        ):
            yield from_minimal_neighborhoods(nbhds)


def relabel(X, perm):
    """Image of ``X`` under the point bijection ``x -> perm[x]``."""
    return FiniteSpace(X.point_count, tuple(_map_mask(o, perm) for o in X.opens))


def _map_mask(mask, perm):
    out = 0
    for x in members(mask):
        out |= 1 << perm[x]
    return out


def is_homeomorphic(X, Y, caps=None):
    if X.point_count != Y.point_count or len(X.opens) != len(Y.opens):
        return False
    resolve(caps).check("homeomorphism_points", X.point_count)
    target = Y._open_set
    for perm in permutations(range(X.point_count)):
        if all(_map_mask(o, perm) in target for o in X.opens):
            return True
    return False
