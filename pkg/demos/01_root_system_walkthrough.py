"""A tour of the G2 root data and its Weyl group.

Weights are pairs (a, b) in fundamental-weight coordinates.  The short
simple root is (2, -1), the long one (-3, 2); the weight and root lattices
coincide, which is special to G2.
"""

from g2bwb.rootdata import POSITIVE_ROOTS, RHO, ParabolicId, Weight, pairing
from g2bwb import weyl

print("positive roots (weight coords, short?):")
for r in POSITIVE_ROOTS:
    print(f"  {r.weight}  short={r.is_short}  <rho, coroot> = {pairing(RHO, r)}")

print("\nWeyl group of order", len(weyl.ALL_ELEMENTS))
for w in weyl.ALL_ELEMENTS:
    print(f"  {str(w):13s} length {w.length}")

print("\nlongest element acts as minus one:",
      weyl.act(weyl.LONGEST, Weight(3, 5)) == Weight(-3, -5))

print("\nthe rho-shifted action on the zero weight:")
for word in ("s1", "s2", "s1s2", "s2s1s2"):
    w = weyl.from_word(word)
    print(f"  {word}.0 = {weyl.dot(w, Weight(0, 0))}")

print("\nminimal coset representatives:")
for par in ParabolicId:
    reps = ", ".join(str(w) for w in weyl.minimal_reps(par))
    print(f"  {par.name.lower():5s}: {reps}")
