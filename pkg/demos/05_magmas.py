"""
Residuation on finite magmas
============================

The Frolík operator only needs a binary operation. Here it is applied to
Cayley tables, and its basic properties are checked on every table of
size 3.
"""

from frolik_lab import FiniteMagma, check_prop_easy, frolik_op, residuate
from frolik_lab.verification import EasyScope, verify_easy

Z3 = FiniteMagma.cyclic(3)
print("(Z3, +): ({0} : {1}) =", set(residuate(Z3, {0}, {1})))
print("F({0}) =", set(frolik_op(Z3, {0})), " F({1, 2}) =", set(frolik_op(Z3, {1, 2})))

left_zero = FiniteMagma(2, [[0, 0], [1, 1]])
report = check_prop_easy(left_zero, {0})
print("left-zero magma, K={0}:", report)

sweep = verify_easy(EasyScope(samples=100))
print(sweep.exhaustive)
print("violations:", len(sweep.discrepancies))
