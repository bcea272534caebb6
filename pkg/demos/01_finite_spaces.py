"""
Finite spaces, products and minimal neighborhoods
=================================================

Every topology on a finite set is determined by the smallest open set
around each point. This script builds a few spaces, takes a product and
counts labeled topologies.
"""

from frolik_lab import (
    discrete,
    enumerate_topologies,
    is_homeomorphic,
    minimal_neighborhood,
    product,
    sierpinski,
    validate_topology,
)
from frolik_lab.bits import members

# The Sierpiński space: {1} is open, {0} is not.
S = sierpinski()
print(S)
for x in range(2):
    print("N(%d) =" % x, set(members(minimal_neighborhood(S, x))))

# Candidate families are checked against the axioms.
try:
    validate_topology(3, [set(), {0}, {1}, {0, 1, 2}])
except ValueError as exc:
    print("rejected:", exc)

# Products encode the point (x, y) as x * |Y| + y.
P = product(S, S)
print("S x S has", P.point_count, "points and", len(P.opens), "opens")
print("discrete(2) x discrete(2) is discrete(4):", product(discrete(2), discrete(2)) == discrete(4))

# Labeled topologies on n points, and how many up to homeomorphism.
for n in range(1, 5):
    spaces = list(enumerate_topologies(n))
    reps = []
    for X in spaces:
        if not any(is_homeomorphic(X, R) for R in reps):
            reps.append(X)
    print(f"n={n}: {len(spaces)} topologies, {len(reps)} up to homeomorphism")
