"""
Homology orders of the Sieradski groups
=======================================

Two independent routes to |H_1| of G_m(x0 x2 x1^-1): the Smith normal form
of the circulant relation matrix, and the resultant of the trefoil
polynomial with t^m - 1.
"""

from cycpres import presentations as pres
from cycpres.alexander import branched_cover_order, torus_alexander
from cycpres.homology import abelianization
from cycpres.verify import fmt_order

delta = torus_alexander(3, 2)
print("trefoil:", delta)

for m in range(2, 13):
    P = pres.sieradski(m)
    A = abelianization(P)
    res = branched_cover_order(delta, m)
    print(f"m={m:2d}  H1 = {str(A):12s} |Res| = {fmt_order(res)}")

# the same ladder one step up, with the (5,2) torus knot
delta5 = torus_alexander(5, 2)
for m in range(2, 11):
    A = abelianization(pres.sieradski_q2(m, 2))
    print(f"q=5 m={m:2d}  H1 = {str(A):12s} |Res| = {fmt_order(branched_cover_order(delta5, m))}")
