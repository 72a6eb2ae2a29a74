"""The rank-p^5 bookkeeping behind the pushforward decomposition.

The multiplicity of each indecomposable summand is a simple module of the
Frobenius kernel; weighting its dimension by the rank data and summing must
give exactly p^5 = 161051 at p = 11, and the full torus character of the
parabolic Verma module must match coefficient for coefficient.  Where the
Jantzen sum formula leaves a composition multiplicity open, the identity
itself pins the unique consistent value, and both parabolic cases must
agree on it.
"""

from g2bwb.rootdata import ParabolicId
from g2bwb.modchar import rank_identity_check

for par in ParabolicId:
    rep = rank_identity_check(11, par)
    print(rep.to_text())
    print()
