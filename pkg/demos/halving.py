"""
Halving a cyclic presentation
=============================

Over 2n generators the odd-indexed generators can be written in terms of the
even ones. Eliminating them leaves a cyclic presentation on n generators.
"""

from cycpres import presentations as pres

for family in sorted(pres.HALVINGS):
    big, rule, small = pres.HALVINGS[family]
    n = 4
    e = pres.halve(family, n)
    print(f"{family}:")
    print("  start ", pres.format_presentation(big(n)))
    print("  result", pres.format_presentation(e.presentation))
    print("  agrees with", pres.format_presentation(small(n)), e.presentation == small(n))
    for line in e.trace[:3]:
        print("   ", line)
