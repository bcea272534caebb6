"""Exhaustive and seeded random sweeps that check the theorems on finite
instances and collect any discrepancies into a report.

A discrepancy means an implementation bug: the statements being checked
are theorems, and every quantifier they contain ranges over the universe,
so restricting to finite universes keeps them true.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations, product as cartesian

from . import __version__
from .bits import members
from .caps import resolve
from .filters import all_families
from .frolik import (
    SpaceUniverse,
    SwpcInstance,
    check_ultrafilter_preservation,
    frolik_member,
    q_member,
    swpc_predicates,
)
from .jsonio import family_to_json, magma_to_json, space_to_json
from .residuation import FiniteMagma, check_prop_easy, frolik_iterates
from .periodic import EventuallyPeriodicSet
from .sampling import random_family, random_table, random_topology, rng_for
from .topology import discrete, enumerate_topologies, indiscrete, sierpinski


def default_pool():
    return (discrete(2), sierpinski(), indiscrete(2))


@dataclass(frozen=True)
class Scope:
    """Sweep bounds.

    The exhaustive phase takes every topology on at most ``max_points``
    points as ``X``, every universe of ``universe_sizes`` spaces from
    ``pool``, and every filter family over the index sizes. The random
    phase draws ``samples`` instances with ``X`` on at most
    ``random_max_points`` points and universes of one or two random
    spaces on at most ``random_universe_points`` points.
    """

    max_points: int = 3
    index_size: int = 2
    fq_index_sizes: tuple = (1, 2)
    pool: tuple = field(default_factory=default_pool)
    universe_sizes: tuple = (1, 2)
    seed: int = 0
    samples: int = 1000
    random_max_points: int = 4
    random_universe_points: int = 2
    random_index_sizes: tuple = (1, 2)
    caps: object = None

    def as_dict(self):
        return {
            "max_points": self.max_points,
            "index_size": self.index_size,
            "fq_index_sizes": list(self.fq_index_sizes),
            "pool": [space_to_json(s) for s in self.pool],
            "universe_sizes": list(self.universe_sizes),
            "random_max_points": self.random_max_points,
            "random_universe_points": self.random_universe_points,
            "random_index_sizes": list(self.random_index_sizes),
        }


@dataclass
class Report:
    theorem: str
    scope: dict
    caps: dict
    exhaustive: dict
    random: dict
    discrepancies: list
    results: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.discrepancies

    def to_json(self):
        return {
            "theorem": self.theorem,
            "version": __version__,
            "scope": self.scope,
            "caps": self.caps,
            "exhaustive": self.exhaustive,
            "random": self.random,
            "discrepancies": self.discrepancies,
            **({"results": self.results} if self.results else {}),
        }


def _run(check, instances, workers):
    if workers <= 1:
        return list(map(check, instances))
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(check, instances, chunksize=64))


def _sweep(theorem, scope, check, exhaustive, randomized, workers):
    discrepancies = []
    counts = {}
    for phase, instances in (("exhaustive", exhaustive), ("random", randomized)):
        instances = list(instances)
        results = _run(check, instances, workers)
        found = 0
        for ordinal, res in enumerate(results):
            if res is not None:
                found += 1
                discrepancies.append({"phase": phase, "ordinal": ordinal, **res})
        counts[phase] = {"instances": len(instances), "discrepancies": found}
    counts["random"]["seed"] = scope.seed
    counts["random"]["samples"] = scope.samples
    return Report(theorem, scope.as_dict(), resolve(scope.caps).as_dict(),
                  counts["exhaustive"], counts["random"], discrepancies)


def universes(pool, sizes):
    for k in sizes:
        for combo in combinations(pool, k):
            yield SpaceUniverse(combo)


def spaces_up_to(n, caps=None):
    for m in range(n + 1):
        yield from enumerate_topologies(m, caps)


def _random_universe(rng, scope):
    count = int(rng.integers(1, 3))
    return SpaceUniverse(tuple(
        random_topology(rng, int(rng.integers(1, scope.random_universe_points + 1)))
        for _ in range(count)
    ))


def _random_x(rng, scope):
    return random_topology(rng, int(rng.integers(0, scope.random_max_points + 1)))


def _pick(rng, options):
    return options[int(rng.integers(0, len(options)))]


def _universe_json(H):
    return [space_to_json(Y) for Y in H]


# -- characterization of Frolík classes for a single family ------------

def swpc_instances(scope):
    spaces = list(spaces_up_to(scope.max_points, scope.caps))
    Hs = list(universes(scope.pool, scope.universe_sizes))
    families = list(all_families(scope.index_size, scope.caps))
    for X, H, F in cartesian(spaces, Hs, families):
        yield SwpcInstance(X, F, H)


def random_swpc_instances(scope):
    for ordinal in range(scope.samples):
        rng = rng_for(scope.seed, ordinal)
        X = _random_x(rng, scope)
        H = _random_universe(rng, scope)
        F = random_family(rng, _pick(rng, scope.random_index_sizes))
        yield SwpcInstance(X, F, H)


def check_swpc_instance(inst, caps=None, faults=None):
    values = swpc_predicates(inst, caps, faults)
    if len(set(values)) == 1:
        return None
    return {
        "instance": {
            "X": space_to_json(inst.X),
            "family": family_to_json(inst.family),
            "universe": _universe_json(inst.H),
        },
        "predicates": list(values),
    }


def verify_swpc(scope=Scope(), workers=1, faults=None):
    check = partial(check_swpc_instance, caps=scope.caps, faults=faults)
    return _sweep("swpc", scope, check, swpc_instances(scope),
                  random_swpc_instances(scope), workers)


# -- (F : H) = Q for families of families -------------------------------

@dataclass(frozen=True)
class FQInstance:
    X: object
    families: tuple
    H: SpaceUniverse


def family_tuples(scope):
    entries = [f for k in scope.fq_index_sizes for f in all_families(k, scope.caps)]
    for f in entries:
        yield (f,)
    yield from combinations(entries, 2)


def fq_instances(scope):
    spaces = list(spaces_up_to(scope.max_points, scope.caps))
    Hs = list(universes(scope.pool, scope.universe_sizes))
    Fs = list(family_tuples(scope))
    for X, H, Fb in cartesian(spaces, Hs, Fs):
        yield FQInstance(X, Fb, H)


def random_fq_instances(scope):
    for ordinal in range(scope.samples):
        rng = rng_for(scope.seed, ordinal)
        X = _random_x(rng, scope)
        H = _random_universe(rng, scope)
        count = int(rng.integers(1, 3))
        Fb = tuple(random_family(rng, _pick(rng, scope.random_index_sizes)) for _ in range(count))
        yield FQInstance(X, Fb, H)


def check_fq_instance(inst, pseudo=False, caps=None, faults=None):
    """Compare the definition of ``(F : H)`` with the constructed ``Q``.

    Also checks that ``(F : H)`` is the intersection of the per-entry
    classes and that every constructed family lies in an input family
    (with ultrafilters preserved). ``faults`` may replace ``"left"`` or
    ``"right"`` with a callable taking the instance.
    """
    faults = faults or {}
    X, Fb, H = inst.X, inst.families, inst.H
    left = faults["left"](inst) if "left" in faults else frolik_member(X, Fb, H, pseudo, caps)
    right = faults["right"](inst) if "right" in faults else q_member(X, Fb, H, pseudo, caps)
    per_entry = all(frolik_member(X, (f,), H, pseudo, caps) for f in Fb)
    preserved = check_ultrafilter_preservation(Fb, H, pseudo, caps)
    if left == right == per_entry and preserved:
        return None
    return {
        "instance": {
            "X": space_to_json(X),
            "families": [family_to_json(f) for f in Fb],
            "universe": _universe_json(H),
        },
        "definition": left,
        "constructed": right,
        "per_entry": per_entry,
        "containment_and_ultrafilters": preserved,
    }


def verify_fq(scope=Scope(), workers=1, faults=None):
    check = partial(check_fq_instance, pseudo=False, caps=scope.caps, faults=faults)
    return _sweep("fq", scope, check, fq_instances(scope), random_fq_instances(scope), workers)


def verify_prop_pseudo(scope=Scope(), workers=1, faults=None):
    check = partial(check_fq_instance, pseudo=True, caps=scope.caps, faults=faults)
    return _sweep("prop", scope, check, fq_instances(scope), random_fq_instances(scope), workers)


# -- residuation on magmas ----------------------------------------------

@dataclass(frozen=True)
class EasyScope:
    size: int = 3
    random_size: int = 5
    seed: int = 0
    samples: int = 1000


def all_tables(size):
    for flat in cartesian(range(size), repeat=size * size):
        yield FiniteMagma(size, flat)


def _easy_violations(M):
    out = []
    for bits in range(1 << M.size):
        K = frozenset(members(bits))
        bad = check_prop_easy(M, K).violations()
        if bad:
            out.append({"magma": magma_to_json(M), "K": sorted(K), "clauses": bad})
    return out


def verify_easy(scope=EasyScope(), workers=1):
    """Every table of ``scope.size`` and ``scope.samples`` random tables of
    ``scope.random_size``, each against all classes."""
    discrepancies = []
    counts = {}
    phases = (
        ("exhaustive", all_tables(scope.size)),
        ("random", (FiniteMagma(scope.random_size, random_table(rng_for(scope.seed, i), scope.random_size))
                    for i in range(scope.samples))),
    )
    for phase, magmas in phases:
        magmas = list(magmas)
        results = _run(_easy_violations, magmas, workers)
        found = 0
        hyps = {"associative": 0, "identity": 0}
        for ordinal, (M, bad) in enumerate(zip(magmas, results)):
            hyps["associative"] += M.is_associative()
            hyps["identity"] += M.identity() is not None
            for b in bad:
                discrepancies.append({"phase": phase, "ordinal": ordinal, **b})
            found += len(bad)
        counts[phase] = {"tables": len(magmas), "classes": len(magmas) * (1 << magmas[0].size)
                         if magmas else 0, "violations": found, **hyps}
    counts["random"]["seed"] = scope.seed
    counts["random"]["samples"] = scope.samples
    return Report("easy", {"size": scope.size, "random_size": scope.random_size}, {},
                  counts["exhaustive"], counts["random"], discrepancies)


# -- the cardinality example --------------------------------------------

EXAMPLE_EXPONENTS = EventuallyPeriodicSet.finite({1, 5}) | EventuallyPeriodicSet.progression(9, 2)
EXPECTED_ITERATES = (
    EventuallyPeriodicSet.finite({4}) | EventuallyPeriodicSet.progression(8, 2),
    EventuallyPeriodicSet.progression(4, 2),
    EventuallyPeriodicSet.progression(2, 2),
)
EXPECTED_MONOID_ITERATE = (EventuallyPeriodicSet.finite({0, 4})
                           | EventuallyPeriodicSet.progression(8, 2))


def verify_cardinality_example(E=EXAMPLE_EXPONENTS):
    """Iterate the Frolík operator on the cardinality class with exponents
    ``E``, over spaces with at least two points and over all spaces."""
    from .jsonio import eps_to_json

    semigroup = frolik_iterates(E, 3, allow_zero=False)
    monoid = frolik_iterates(E, 2, allow_zero=True)
    discrepancies = []
    if tuple(semigroup) != EXPECTED_ITERATES and E == EXAMPLE_EXPONENTS:
        discrepancies.append({"setting": "at least two points",
                              "expected": [eps_to_json(x) for x in EXPECTED_ITERATES]})
    strict = all(a < b for a, b in zip(semigroup, semigroup[1:]))
    if not strict:
        discrepancies.append({"setting": "at least two points", "strict_chain": False})
    if monoid[0] != monoid[1]:
        discrepancies.append({"setting": "all spaces", "idempotent": False})
    if E == EXAMPLE_EXPONENTS and monoid[0] != EXPECTED_MONOID_ITERATE:
        discrepancies.append({"setting": "all spaces",
                              "expected": eps_to_json(EXPECTED_MONOID_ITERATE)})

    def render(sets):
        return [{"exponents": eps_to_json(x), "cardinalities": x.describe("2^{{{}}}")}
                for x in sets]

    return Report(
        "cardinality-example",
        {"exponents": eps_to_json(E), "cardinalities": E.describe("2^{{{}}}")},
        {},
        {},
        {},
        discrepancies,
        {"at_least_two_points": render(semigroup), "strict_chain": strict,
         "all_spaces": render(monoid), "idempotent": monoid[0] == monoid[1]},
    )
