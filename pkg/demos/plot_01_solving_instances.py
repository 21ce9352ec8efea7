"""
Solving single instances
========================

Classify c*x^2 + d^(2m+1) = 2*y^n for a few (c, d, n) and print every
primitive solution together with the route that produced it.
"""

from lrnsolve import EquationInstance, SearchBounds, classify, verify_solution

# A prime exponent with a sporadic Lehmer pair behind it
res = classify(EquationInstance(7, 11, 7))
print(res.mode, res.clauses, res.completeness)
for s in res.solutions:
    print("  ", s.as_tuple(), s.provenance, s.coords)

###############################################################################
# Composite exponents reduce to an odd prime p dividing n that does not divide
# the class number.  Here h(Q(sqrt(-73))) = 4, so n = 6 goes through p = 3.
res = classify(EquationInstance(1, 73, 6))
print(res.mode, res.prime, [s.as_tuple() for s in res.solutions])

###############################################################################
# Quintic solutions: both have m = 1 while the imaginary part is 1.
for s in classify(EquationInstance(1, 5, 5)).solutions:
    print("  ", s.as_tuple(), "check:", verify_solution(*s.as_tuple()))

###############################################################################
# Instances outside the hypotheses fall back to exhaustive search.
res = classify(EquationInstance(3, 5, 3), SearchBounds(y_max=500))
print(res.mode, sorted(res.solutions.tuples()))
