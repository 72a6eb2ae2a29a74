"""Karoubian generation by closure.

Starting from the handful of classes the collections provide, the closure
engine saturates filtration, pushforward, tensor and Koszul rules until no
new line-bundle class appears.  Every derivation is logged and replayable.
"""

from g2bwb.rootdata import ParabolicId, Weight
from g2bwb.karoubi import line_class, verify_generation

for par in ParabolicId:
    rep, kb = verify_generation(par)
    print(rep.to_text())
    print(f"  classes known in total: {len(kb.known)}")
    print()

rep, kb = verify_generation(ParabolicId.SHORT)
target = Weight(-3, -3)
print(f"tail of the derivation chain for L{target}:")
for step in kb.chain(line_class(target))[-8:]:
    print(f"  {step}")
