"""Cohomology of line bundles on the full flag variety of G2.

A line bundle either has singular rho-shift and no cohomology at all, or
all of it sits in a single degree counted by the Weyl element that sorts
the shift into the dominant cone.
"""

from g2bwb.rootdata import RHO, Weight
from g2bwb.cohomology import bott_line, linked, lowest_alcove

print("a sample of line bundles:")
for lam in (Weight(1, 1), Weight(3, -2), Weight(1, -1), Weight(4, -3),
            Weight(-1, -1), Weight(0, -3)):
    print(f"  L{lam}: {bott_line(lam)}")

print("\nSerre duality pairs degrees i and 6 - i:")
for lam in (Weight(3, -2), Weight(2, 1)):
    dual = -lam - RHO.scaled(2)
    print(f"  {lam} -> {bott_line(lam)},  {dual} -> {bott_line(dual)}")

print("\nlinkage at p = 11 splits weights into affine orbits:")
pairs = [(Weight(1, 1), Weight(2, 0)), (Weight(0, 0), Weight(0, 1)),
         (Weight(0, 0), Weight(3, -2))]
for lam, mu in pairs:
    print(f"  linked({lam}, {mu}) = {linked(lam, mu, 11)}")

print("\nclosed lowest alcove membership at p = 11 certifies simplicity:")
for lam in (Weight(1, 1), Weight(2, 0), Weight(2, 1), Weight(3, 0)):
    print(f"  {lam}: {lowest_alcove(lam, 11)}")
