"""
The cyclic symmetry and its quotient
====================================

Shifting indices by one is an automorphism of P_n and of Q_n. Its orbit
space carries a single face pair, and the read-off relator is a power of one
generator.
"""

from cycpres.complexes import build_P, build_Q
from cycpres.symmetry import quotient_by_rho, quotient_homology, rho

for family, builder in (("P", build_P), ("Q", build_Q)):
    for n in (3, 4, 5):
        C, P = builder(n)
        a = rho(n, family)
        res = quotient_by_rho(C, P, a)
        print(f"{family}_{n}: fixed {res.fixed_vertices}, {res.vertex_orbits} vertex orbits, "
              f"{res.face_orbits} face orbits, relator {res.relators[0]}, "
              f"H1 = {quotient_homology(family, n)}")
