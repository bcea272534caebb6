"""
Iterating the Frolík operator on cardinalities
==============================================

Let K be the spaces of cardinality 2, 2^5 or 2^(9+2h). Products multiply
cardinalities, so on exponents the Frolík operator becomes
``E -> {e | e + E ⊆ E}``, which eventually periodic sets decide exactly.
Over spaces with at least two points the chain grows strictly; once the
one-point space (exponent 0) is allowed it stops after one step.
"""

from frolik_lab import EventuallyPeriodicSet as EPS, frolik_iterates

E = EPS.finite({1, 5}) | EPS.progression(9, 2)
print("K:", E.describe("2^{{{}}}"))

chain = frolik_iterates(E, 3)
for n, x in enumerate(chain, start=1):
    print(f"F^{n}(K):", x.describe("2^{{{}}}"))
print("strict:", chain[0] < chain[1] < chain[2])

g1, g2 = frolik_iterates(E, 2, allow_zero=True)
print("over all spaces:", g1.describe("2^{{{}}}"), "| idempotent:", g1 == g2)
