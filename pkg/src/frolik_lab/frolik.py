"""Relative Frolík classes of finite spaces.

Classes of spaces are predicates (``FiniteSpace -> bool``); the only
explicit lists of spaces are universes, which stand in for a class ``H``
wherever a statement quantifies over ``Y ∈ H``.
"""

from dataclasses import dataclass
from functools import partial

from .bits import is_subset
from .caps import resolve
from .compactness import (
    is_family_compact,
    is_family_pseudocompact,
    is_seq_compact,
)
from .convergence import (
    class_pspectrum,
    class_spectrum,
    hit_mask,
    point_sequences,
    sorted_spectra,
    spectrum,
)
from .errors import SizeCapExceeded
from .filters import FilterFamily, intersect_families, is_ultrafilter_family
from .topology import FiniteSpace, product


@dataclass(frozen=True)
class SpaceUniverse:
    """A finite list of spaces playing the role of a class."""

    spaces: tuple = ()
    max_product_points: int = 64

    def __post_init__(self):
        spaces = tuple(self.spaces)
        object.__setattr__(self, "spaces", spaces)
        biggest = sorted((s.point_count for s in spaces), reverse=True)[:2]
        if len(biggest) == 2 and biggest[0] * biggest[1] > self.max_product_points:
            raise SizeCapExceeded("product_points", biggest[0] * biggest[1], self.max_product_points)

    def __iter__(self):
        return iter(self.spaces)

    def __len__(self):
        return len(self.spaces)


def is_frolik_for(X, K, H, caps=None):
    """True iff ``K(X × Y)`` for every ``Y`` in ``H``."""
    return all(K(product(X, Y, caps)) for Y in H)


def residuate_class(K, H, caps=None):
    """The class ``(K : H)`` as a predicate on spaces."""
    return partial(is_frolik_for, K=K, H=H, caps=caps)


@dataclass(frozen=True)
class SwpcInstance:
    X: FiniteSpace
    family: FilterFamily
    H: SpaceUniverse

    @property
    def index_size(self):
        return self.family.index_size


# The seven predicates below each walk their own quantifier structure.
# They are equivalent by the characterization of Frolík classes of
# sequencewise compact spaces; any disagreement is a bug.

def _p1_frolik(inst, caps):
    return is_frolik_for(inst.X, partial(is_seq_compact, family=inst.family, caps=caps), inst.H, caps)


def _p2_product_compact(inst, caps):
    return all(is_seq_compact(product(inst.X, Y, caps), inst.family, caps) for Y in inst.H)


def _p3_raw_product(inst, caps):
    kernels = inst.family.kernels
    k = inst.index_size
    for Y in inst.H:
        Z = product(inst.X, Y, caps)
        resolve(caps).check("sequences", Z.point_count**k)
        containing = [[u for u in Z.opens if u >> p & 1] for p in range(Z.point_count)]
        for z in point_sequences(Z, k):
            pulls = {}
            for u in Z.opens:
                m = 0
                for i, v in enumerate(z):
                    if u >> v & 1:
                        m |= 1 << i
                pulls[u] = m
            if not any(
                all(is_subset(ker, pulls[u]) for u in containing[p])
                for ker in kernels
                for p in range(Z.point_count)
            ):
                return False
    return True


def _converges_somewhere(X, s, kernel):
    return any(is_subset(kernel, hit_mask(X, s, x)) for x in range(X.point_count))


def _p4_componentwise(inst, caps):
    X, kernels, k = inst.X, inst.family.kernels, inst.index_size
    for Y in inst.H:
        for y in point_sequences(Y, k):
            for x in point_sequences(X, k):
                if not any(
                    _converges_somewhere(Y, y, ker) and _converges_somewhere(X, x, ker)
                    for ker in kernels
                ):
                    return False
    return True


def _p5_spectrum_quantifier(inst, caps):
    X, k = inst.X, inst.index_size
    for Y in inst.H:
        for y in point_sequences(Y, k):
            allowed = inst.family.kernels & spectrum(Y, y, caps).kernels
            for x in point_sequences(X, k):
                if not any(_converges_somewhere(X, x, ker) for ker in allowed):
                    return False
    return True


def _p6_per_sequence(inst, caps):
    for Y in inst.H:
        for y in point_sequences(Y, inst.index_size):
            q = intersect_families(inst.family, spectrum(Y, y, caps))
            if not is_seq_compact(inst.X, q, caps):
                return False
    return True


def _p7_class_spectrum(inst, caps):
    return all(
        is_seq_compact(inst.X, intersect_families(inst.family, G), caps)
        for G in sorted_spectra(class_spectrum(inst.H, inst.index_size, caps))
    )


SWPC_PREDICATES = (
    _p1_frolik,
    _p2_product_compact,
    _p3_raw_product,
    _p4_componentwise,
    _p5_spectrum_quantifier,
    _p6_per_sequence,
    _p7_class_spectrum,
)


def swpc_predicates(inst, caps=None, faults=None):
    """Evaluate the seven equivalent conditions on ``inst``.

    ``faults`` maps a predicate number (1-7) to a replacement callable
    taking the instance; the harness self-tests use it.
    """
    faults = faults or {}
    out = []
    for n, pred in enumerate(SWPC_PREDICATES, start=1):
        if n in faults:
            out.append(bool(faults[n](inst)))
        else:
            out.append(pred(inst, caps))
    return tuple(out)


def construct_Q(families, H, pseudo=False, caps=None):
    """All intersections ``F ∩ G`` with ``F`` in ``families`` and ``G`` a
    (pseudo)spectrum of ``H`` over the index set of ``F``.

    Result is deduplicated and sorted.
    """
    spectra = class_pspectrum if pseudo else class_spectrum
    out = set()
    for f in families:
        for G in spectra(H, f.index_size, caps):
            out.add(intersect_families(f, G))
    return tuple(sorted(out, key=FilterFamily.sort_key))


def frolik_member(X, families, H, pseudo=False, caps=None):
    """Membership of ``X`` in ``(Fc : H)`` (or ``(Fp : H)``), straight from
    the definition."""
    test = is_family_pseudocompact if pseudo else is_family_compact
    return all(test(product(X, Y, caps), families, caps) for Y in H)


def q_member(X, families, H, pseudo=False, caps=None):
    """Membership of ``X`` in ``Qc`` (or ``Qp``) for the constructed ``Q``."""
    test = is_family_pseudocompact if pseudo else is_family_compact
    return test(X, construct_Q(families, H, pseudo, caps), caps)


def check_ultrafilter_preservation(families, H, pseudo=False, caps=None):
    """Every constructed family sits inside some input family, and
    ultrafilter-only inputs give ultrafilter-only outputs."""
    Q = construct_Q(families, H, pseudo, caps)
    contained = all(any(q.issubset(f) for f in families) for q in Q)
    if all(is_ultrafilter_family(f) for f in families):
        return contained and all(is_ultrafilter_family(q) for q in Q)
    return contained
