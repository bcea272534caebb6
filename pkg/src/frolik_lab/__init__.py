"""Filter convergence, Frolík classes and residuation on finite structures."""

__version__ = "0.1.0"

from .caps import DEFAULT_CAPS, Caps
from .compactness import (
    Verdict,
    is_family_compact,
    is_family_pseudocompact,
    is_seq_compact,
    is_seq_pseudocompact,
    seq_compact_verdict,
    seq_pseudocompact_verdict,
)
from .convergence import (
    class_pspectrum,
    class_spectrum,
    f_converges,
    f_limit_point,
    pspectrum,
    spectrum,
)
from .errors import *  # noqa: F403
from .filters import (
    Filter,
    FilterFamily,
    FilterKind,
    all_families,
    classify,
    enumerate_filters,
    filter_member,
    intersect_families,
)
from .frolik import (
    SpaceUniverse,
    SwpcInstance,
    check_ultrafilter_preservation,
    construct_Q,
    frolik_member,
    is_frolik_for,
    q_member,
    swpc_predicates,
)
from .periodic import EventuallyPeriodicSet, shift_subset
from .residuation import (
    FiniteMagma,
    check_prop_easy,
    exponent_frolik,
    frolik_iterates,
    frolik_op,
    is_factor_closed,
    residuate,
)
from .topology import (
    FiniteSpace,
    discrete,
    enumerate_topologies,
    indiscrete,
    is_homeomorphic,
    make_standard,
    minimal_neighborhood,
    product,
    sierpinski,
    validate_topology,
)
