"""
Class numbers from reduced forms
================================

h(Q(sqrt(-D))) is the number of reduced primitive forms of the field
discriminant (-D when D = 3 mod 4, otherwise -4D).
"""

from lrnsolve.quadforms import class_number, field_discriminant, hypothesis_check, reduced_forms

for D in (1, 5, 73, 77):
    disc = field_discriminant(D)
    forms = reduced_forms(disc)
    print(f"D={D:3d} disc={disc:5d} h={class_number(D)}", [(f.a, f.b, f.c) for f in forms][:8])

###############################################################################
# Class numbers equal to one, D <= 200
print([D for D in range(1, 201) if hypothesis_check(1, D, 3).squarefree and class_number(D) == 1])

###############################################################################
# The admissibility report used by the solver
print(hypothesis_check(7, 11, 7))
print(hypothesis_check(1, 73, 6))
