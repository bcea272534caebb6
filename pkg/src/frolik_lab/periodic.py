"""Eventually periodic sets of natural numbers.

A set is given by a finite exceptional part below ``threshold`` and, from
``threshold`` on, by residues modulo ``period``. The constructor reduces
to the canonical form (minimal period, then minimal threshold), so two
values are equal iff they describe the same set.
"""

from dataclasses import dataclass
from math import lcm


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    exceptional: frozenset = frozenset()
    threshold: int = 0
    period: int = 1
    residues: frozenset = frozenset()

    def __post_init__(self):
        exc, t, p, res = frozenset(self.exceptional), self.threshold, self.period, frozenset(self.residues)
        if p < 1:
            raise ValueError(f"period must be positive, got {p}")
        if t < 0:
            raise ValueError(f"threshold must be nonnegative, got {t}")
        if any(not 0 <= e < t for e in exc):
            raise ValueError(f"exceptional elements must lie in [0, {t})")
        if any(not 0 <= r < p for r in res):
            raise ValueError(f"residues must lie in [0, {p})")
        for d in range(1, p + 1):
            if p % d == 0 and all((r + d) % p in res for r in res):
                break
        res = frozenset(r % d for r in res)
        exc = set(exc)
        while t > 0 and ((t - 1) in exc) == ((t - 1) % d in res):
            exc.discard(t - 1)
            t -= 1
        for name, value in (("exceptional", frozenset(exc)), ("threshold", t),
                            ("period", d), ("residues", res)):
            object.__setattr__(self, name, value)

    @classmethod
    def finite(cls, elements):
        elements = frozenset(elements)
        return cls(elements, max(elements, default=-1) + 1, 1, frozenset())

    @classmethod
    def progression(cls, start, step):
        """``{start + step*h | h >= 0}``; ``step = 0`` gives ``{start}``."""
        if step == 0:
            return cls.finite({start})
        return cls(frozenset(), start, step, frozenset({start % step}))

    @classmethod
    def from_predicate(cls, pred, threshold, period):
        """Set of ``n`` with ``pred(n)``, where ``pred`` is known to be
        periodic with ``period`` from ``threshold`` on."""
        exc = frozenset(n for n in range(threshold) if pred(n))
        res = frozenset(n % period for n in range(threshold, threshold + period) if pred(n))
        return cls(exc, threshold, period, res)

    def __contains__(self, n):
        if n < 0:
            return False
        if n < self.threshold:
            return n in self.exceptional
        return n % self.period in self.residues

    def elements_below(self, bound):
        return [n for n in range(max(bound, 0)) if n in self]

    def is_empty(self):
        return not self.exceptional and not self.residues

    def is_finite(self):
        return not self.residues

    def __or__(self, other):
        t = max(self.threshold, other.threshold)
        p = lcm(self.period, other.period)
        return EventuallyPeriodicSet.from_predicate(lambda n: n in self or n in other, t, p)

    def __and__(self, other):
        t = max(self.threshold, other.threshold)
        p = lcm(self.period, other.period)
        return EventuallyPeriodicSet.from_predicate(lambda n: n in self and n in other, t, p)

    def issubset(self, other):
        return shift_subset(0, self, other)

    def __le__(self, other):
        return self.issubset(other)

    def __lt__(self, other):
        return self != other and self.issubset(other)

    def tails(self):
        """``(first, step)`` for each arithmetic progression in the tail."""
        t, p = self.threshold, self.period
        firsts = sorted(t + (r - t) % p for r in self.residues)
        return [(a, p) for a in firsts]

    def describe(self, fmt="{}"):
        """Human-readable form; ``fmt`` renders each element, for example
        ``"2^{}"`` for exponent sets."""
        parts = []
        if self.exceptional:
            parts.append("{" + ", ".join(fmt.format(e) for e in sorted(self.exceptional)) + "}")
        for a, p in self.tails():
            term = f"{a}+{p}h" if p > 1 else f"{a}+h"
            parts.append("{" + fmt.format(term) + " | h >= 0}")
        return " ∪ ".join(parts) if parts else "{}"

    def __str__(self):
        return self.describe()


def shift_subset(e, S, T):
    """Decide ``e + S ⊆ T``.

    Beyond ``max(threshold_S, threshold_T - e)`` both memberships are
    periodic with ``lcm(period_S, period_T)``, so one window past that
    point decides the whole tail.
    """
    bound = max(S.threshold, T.threshold - e, 0) + lcm(S.period, T.period)
    return all(s + e in T for s in S.elements_below(bound))
