"""
Relative Frolík classes
=======================

``X`` belongs to ``(Fc : H)`` when ``X x Y`` is sequencewise F-compact for
every ``Y`` in ``H``. The same class is cut out by a family built from
the spectra of ``H``: intersect each input family with each spectrum and
require compactness for all of them. Both sides are computed here.
"""

from frolik_lab import (
    FilterFamily,
    SpaceUniverse,
    SwpcInstance,
    construct_Q,
    discrete,
    enumerate_topologies,
    frolik_member,
    indiscrete,
    q_member,
    sierpinski,
    swpc_predicates,
)
from frolik_lab.verification import Scope, verify_swpc

# The whole index set as the only kernel: every pair of points must
# share a neighborhood-minimal limit.
whole = FilterFamily.of(2, [[0, 1]])
H = SpaceUniverse((indiscrete(2), sierpinski()))

Q = construct_Q((whole,), H)
print("constructed families:")
for q in Q:
    print("  ", q)

members_by_definition = []
members_by_q = []
for X in enumerate_topologies(3):
    members_by_definition.append(frolik_member(X, (whole,), H))
    members_by_q.append(q_member(X, (whole,), H))
print("three-point spaces in the class:", sum(members_by_definition), "of 29")
print("both descriptions agree:", members_by_definition == members_by_q)

# Against discrete(2) the identity sequence leaves no usable filter.
print("against discrete(2):", construct_Q((whole,), SpaceUniverse((discrete(2),))))

# The seven equivalent conditions on one instance.
inst = SwpcInstance(discrete(2), whole, SpaceUniverse((indiscrete(2),)))
print("predicates (1)-(7):", swpc_predicates(inst))

# A small sweep.
report = verify_swpc(Scope(max_points=2, samples=50))
print(report.exhaustive, report.random)
