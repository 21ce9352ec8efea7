"""
Parametric families
===================

Cubic solutions come from d^(2m+1) = 3u^2c -+ 2, quintic ones from the
Fibonacci and Lucas defect pairs, and a sextic family from the negative Pell
equation y^2 - 2u^2 = -1.
"""

from lrnsolve.fiblucas import neg_pell_iter
from lrnsolve.model import SearchBounds
from lrnsolve.solver import p3_family, p5_families, pell5_scan

for u in (1, 3, 5, 7, 9):
    s = p3_family(1, u, 0) or p3_family(1, u, 0, relaxed=True)
    print("u =", u, s.as_tuple() if s else None)
print("flipped:", p3_family(3, 1, 0, sign=1).as_tuple())

###############################################################################
for s in p5_families(SearchBounds(k_max=30, t_max=30)):
    print(s.as_tuple(), s.provenance, s.coords.get("k"), s.coords.get("eps"))

###############################################################################
for pair in neg_pell_iter(4):
    u, y = pair.u, pair.y
    d, x = 3 * u * u - 2, 4 * u**3 - 3 * u
    print(f"t={pair.t}: {x}^2 + {d} = 2*{y}^6 ->", x * x + d == 2 * y**6)

###############################################################################
recs = pell5_scan(20)
print([(r.k, r.eps, r.integral) for r in recs])
