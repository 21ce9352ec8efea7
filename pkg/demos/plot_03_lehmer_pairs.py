"""
Lehmer numbers and primitive divisors
=====================================

Lehmer numbers are generated by an integer recurrence from the parameters
(a, b); no square roots are formed.
"""

from lrnsolve.lehmer import LehmerParams, defect_table, lehmer_values, matches_defect, primitive_divisor

pair = LehmerParams(1, 5)
print("L_1..L_10 of (1, 5):", lehmer_values(pair, 10))
for n in (5, 7):
    print(n, primitive_divisor(pair, n))

###############################################################################
# The pairs whose n-th term has no primitive divisor, for primes n <= 30.
for ell in (3, 5, 7, 13):
    print(ell, [e.pair or e.family for e in defect_table(ell)])

###############################################################################
# Above 30 every valid pair has a primitive divisor; spot-check one.
big = LehmerParams(7, -13)
print(primitive_divisor(big, 37))
print("(14, -22) listed for 7:", matches_defect((14, -22), 7))
