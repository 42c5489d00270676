"""
Face-paired spheres and their spines
====================================

Build P_n and Q_n, glue the faces, and read a presentation back from the
quotient 2-complex.
"""

from cycpres import presentations as pres
from cycpres.complexes import (
    build_P,
    build_Q,
    edge_trace,
    is_spine,
    quotient,
    read_presentation,
    validate_sphere,
)

C, P = build_P(4)
rep = validate_sphere(C)
print("P_4 sphere:", rep.V, "vertices,", rep.E, "edges,", rep.F, "faces")
Q = quotient(C, P)
print("quotient counts (V, E, F):", Q.counts, "chi =", Q.euler)
print("spine:", is_spine(C, P, Q).is_spine)

# follow one edge around its class
steps, _ = edge_trace(C, P, "Fm2", 4, -1)
print("edge class:", " -> ".join(f"[{a},{b}]" for a, b in (s.edge for s in steps)))

reading = read_presentation(C, P, pres.half_q3(4), Q)
print("read-off matches G_4(x0 x1^2 x2 x1^-1):", reading.matches)

# Q_n is larger: 13-gons built from the vertex link of the 13-letter word
C, P = build_Q(4)
Q = quotient(C, P)
print("Q_4 quotient:", Q.counts, "edge class sizes", sorted({len(ec) for ec in Q.edge_classes}))
reading = read_presentation(C, P, pres.half_q5(4), Q)
for r in reading.renamed():
    print("  ", r)
