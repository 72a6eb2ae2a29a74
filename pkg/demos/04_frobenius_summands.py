"""Decomposition of the Frobenius pushforward of the structure sheaf.

On the short-root flag variety the pushforward picks up one summand beyond
the exceptional collection, a rank-nine sheaf with a seven-dimensional
space of self-extensions in degree one; that single cell is the witness
that the pushforward has nontrivial self-extension.
"""

from g2bwb.rootdata import ParabolicId
from g2bwb.extcollection import frobenius_report

for par in ParabolicId:
    rep = frobenius_report(par, 11)
    print(rep.to_text())
    print()
