"""Line-bundle cohomology on the flag variety of G2 and its two P1-fibrations.

``bott_line`` evaluates the cohomology of a line bundle on the full flag
variety: it vanishes when the rho-shift is singular and otherwise sits in a
single degree, the number of positive coroots made negative.  For a filtered
sheaf on either G/P the atoms are strings, each of which contributes through
the same evaluation; the resulting table is exact when no two contributions
can be connected by a boundary map, which the linkage principle detects.

Tables that are only upper bounds carry their Euler characteristic, written
in the basis of Weyl characters.  Intersecting bounds obtained from
different presentations of the same sheaf, and then solving the per-weight
alternating-sum constraints, recovers the exact table whenever the
constraints pin a unique solution.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .rootdata import POSITIVE_ROOTS, RHO, Weight, ZERO
from .charring import FilteredPModule, weyl_character
from . import weyl

DEFAULT_P = 11

# The wall used for affine reduction: the positive root with highest coroot.
_BETA = Weight(1, 0)  # 2*alpha1 + alpha2 as a weight


def _beta_pair(x: Weight) -> int:
    return 2 * x.a + 3 * x.b


@dataclass(frozen=True)
class BottResult:
    """Either vanishing or concentration in one degree."""

    vanishes: bool
    degree: int = -1
    weight: Weight = ZERO
    caveat: bool = False

    def __str__(self) -> str:
        if self.vanishes:
            return "VANISHES"
        return f"H^{self.degree} = nabla{self.weight}"


@lru_cache(maxsize=None)
def bott_line(lam: Weight, p: int = DEFAULT_P) -> BottResult:
    """Cohomology of the line bundle of weight lam on the full flag variety."""
    x = lam + RHO
    if any(alpha.pair(x) == 0 for alpha in POSITIVE_ROOTS):
        return BottResult(vanishes=True)
    degree = sum(1 for alpha in POSITIVE_ROOTS if alpha.pair(x) < 0)
    y = x
    while not y.is_dominant():
        y = weyl.act(weyl.S1 if y.a < 0 else weyl.S2, y)
    out = y - RHO
    caveat = degree >= 2 or not lowest_alcove(out, p)
    return BottResult(vanishes=False, degree=degree, weight=out, caveat=caveat)


def weyl_euler(lam: Weight) -> tuple[int, Weight] | None:
    """Euler characteristic of the weight lam: None or (sign, dominant weight)."""
    r = bott_line(lam)
    if r.vanishes:
        return None
    return ((-1) ** r.degree, r.weight)


def lowest_alcove(lam: Weight, p: int = DEFAULT_P) -> bool:
    """True iff 0 < <lam+rho, alpha^v> <= p for every positive root."""
    x = lam + RHO
    return all(0 < alpha.pair(x) <= p for alpha in POSITIVE_ROOTS)


def affine_normal_form(x: Weight, p: int) -> Weight:
    """Unique representative of the p-dilated affine Weyl orbit of x in the
    closed dominant fundamental domain."""
    while True:
        while not x.is_dominant():
            x = weyl.act(weyl.S1 if x.a < 0 else weyl.S2, x)
        t = _beta_pair(x)
        if t <= p:
            return x
        x = x - _BETA.scaled(t - p)


def linked(lam: Weight, mu: Weight, p: int = DEFAULT_P) -> bool:
    """True iff the two weights lie in one p-dot affine Weyl orbit."""
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    return affine_normal_form(lam + RHO, p) == affine_normal_form(mu + RHO, p)


@dataclass(frozen=True)
class LinkageClass:
    """A p-dot affine Weyl orbit, keyed by its closed-alcove representative."""

    representative: Weight
    p: int

    @staticmethod
    def of(lam: Weight, p: int = DEFAULT_P) -> "LinkageClass":
        return LinkageClass(affine_normal_form(lam + RHO, p), p)

    def contains(self, mu: Weight) -> bool:
        return affine_normal_form(mu + RHO, self.p) == self.representative


Degrees = dict[int, Counter]  # degree -> multiset of dominant Weights


def _freeze(by_degree: Degrees) -> tuple[tuple[int, tuple[Weight, ...]], ...]:
    return tuple(
        (d, tuple(sorted(cnt.elements())))
        for d, cnt in sorted(by_degree.items())
        if cnt.total()
    )


@dataclass(frozen=True)
class CohomologyTable:
    """Degree-indexed multisets of dominant weights, exact or an upper bound."""

    degrees: tuple[tuple[int, tuple[Weight, ...]], ...]
    exact: bool
    euler: tuple[tuple[Weight, int], ...]
    caveats: tuple[str, ...] = ()

    @staticmethod
    def build(by_degree: Degrees, exact: bool, euler: dict[Weight, int],
              caveats: tuple[str, ...] = ()) -> "CohomologyTable":
        return CohomologyTable(
            _freeze(by_degree),
            exact,
            tuple(sorted((k, v) for k, v in euler.items() if v)),
            caveats,
        )

    def counters(self) -> Degrees:
        return {d: Counter(ws) for d, ws in self.degrees}

    def euler_dict(self) -> dict[Weight, int]:
        return dict(self.euler)

    def entries(self, degree: int) -> tuple[Weight, ...]:
        for d, ws in self.degrees:
            if d == degree:
                return ws
        return ()

    def is_zero(self) -> bool:
        return not self.degrees

    def max_degree(self) -> int:
        return max((d for d, _ in self.degrees), default=-1)

    def dimension(self, degree: int) -> int:
        return sum(weyl_character(w).dimension() for w in self.entries(degree))

    def to_json(self) -> dict:
        return {
            "degrees": {str(d): [[w.a, w.b] for w in ws] for d, ws in self.degrees},
            "exact": self.exact,
            "caveats": list(self.caveats),
        }


def _linkage_collision(by_degree: Degrees, p: int) -> bool:
    """True if one linkage class shows up in two distinct degrees."""
    seen: dict[Weight, set[int]] = {}
    for d, cnt in by_degree.items():
        for w in cnt:
            nf = affine_normal_form(w + RHO, p)
            seen.setdefault(nf, set()).add(d)
    return any(len(ds) > 1 for ds in seen.values())


def cohomology_filtered(mod: FilteredPModule, p: int = DEFAULT_P) -> CohomologyTable:
    """Merge the per-atom line evaluations of a filtered sheaf on G/P."""
    by_degree: Degrees = {}
    euler: dict[Weight, int] = {}
    caveats: list[str] = []
    for s in mod.atoms:
        r = bott_line(s.highest, p)
        if r.vanishes:
            continue
        by_degree.setdefault(r.degree, Counter())[r.weight] += 1
        euler[r.weight] = euler.get(r.weight, 0) + (-1) ** r.degree
        if r.caveat:
            caveats.append(f"char-p caveat at atom {s.highest} (degree {r.degree})")
    exact = not _linkage_collision(by_degree, p)
    return CohomologyTable.build(by_degree, exact, euler, tuple(caveats))


class EulerMismatch(ValueError):
    """Two tables claimed to present the same object disagree on Euler data."""


def _solve_box(nd: dict[int, int], chi: int) -> list[dict[int, int]] :
    """All t with 0 <= t_d <= n_d and alternating sum chi."""
    degs = sorted(nd)
    sols = []
    for combo in itertools.product(*(range(nd[d] + 1) for d in degs)):
        if sum((-1) ** d * t for d, t in zip(degs, combo)) == chi:
            sols.append(dict(zip(degs, combo)))
    return sols


def certify(by_degree: Degrees, euler: dict[Weight, int]) -> tuple[Degrees, bool, list[Weight]]:
    """Resolve an upper bound against its Euler constraint, weight by weight.

    Returns the (possibly pruned) table, an exactness flag, and the list of
    weights whose multiplicities the constraints do not pin down.
    """
    weights = set(euler)
    for cnt in by_degree.values():
        weights.update(cnt)
    out: Degrees = {}
    ambiguous: list[Weight] = []
    for w in sorted(weights):
        nd = {d: cnt[w] for d, cnt in by_degree.items() if cnt[w]}
        chi = euler.get(w, 0)
        sols = _solve_box(nd, chi)
        if not sols:
            raise EulerMismatch(f"no solution for weight {w}: bound {nd}, chi {chi}")
        if len(sols) == 1:
            for d, t in sols[0].items():
                if t:
                    out.setdefault(d, Counter())[w] += t
        else:
            ambiguous.append(w)
            for d, t in nd.items():
                out.setdefault(d, Counter())[w] += t
    return out, not ambiguous, ambiguous


def intersect_tables(t1: CohomologyTable, t2: CohomologyTable) -> CohomologyTable:
    """Per-degree multiset intersection of two bounds on the same object."""
    if t1.euler != t2.euler:
        raise EulerMismatch(
            f"presentations disagree: {t1.euler} versus {t2.euler}"
        )

    def contained(exact: CohomologyTable, bound: CohomologyTable) -> bool:
        cb = bound.counters()
        return all(cnt <= cb.get(d, Counter()) for d, cnt in exact.counters().items())

    if t1.exact and t2.exact:
        if t1.degrees != t2.degrees:
            raise EulerMismatch("two exact tables for one object differ")
        return t1
    if t1.exact:
        if not contained(t1, t2):
            raise EulerMismatch("exact table not contained in the other bound")
        return t1
    if t2.exact:
        if not contained(t2, t1):
            raise EulerMismatch("exact table not contained in the other bound")
        return t2
    c1, c2 = t1.counters(), t2.counters()
    inter: Degrees = {}
    for d in set(c1) & set(c2):
        m = c1[d] & c2[d]
        if m.total():
            inter[d] = m
    pruned, exact, _ = certify(inter, t1.euler_dict())
    caveats = tuple(dict.fromkeys(t1.caveats + t2.caveats))
    return CohomologyTable.build(pruned, exact or (t1.exact and t2.exact), t1.euler_dict(), caveats)
