"""Exact formal character ring for G2 and its two maximal parabolic Levis.

A :class:`Character` is a finite map from weights to integer multiplicities
(signed entries are allowed, so virtual characters are first-class).  Weyl
characters are produced by Freudenthal's multiplicity recursion; exterior
powers go through the elementary-symmetric generating function; tensor
products are plain convolutions.  All of it is exact integer arithmetic.

Parabolic costandard modules are sl2-strings: ``PString(P, lam)`` has the
weights ``lam, lam - alpha_P, ..., s_P(lam)``.  A :class:`FilteredPModule`
is an ordered tuple of such atoms, listed quotient end first (the same order
as a filtration diagram read top to bottom); the bottom atom is the
submodule end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootdata import (
    POSITIVE_ROOTS,
    RHO,
    ZERO,
    ParabolicId,
    Weight,
    dominance_leq,
    root_coords,
)
from . import weyl


def inner(lam: Weight, mu: Weight) -> int:
    """W-invariant inner product, normalized so (alpha1, alpha1) = 2."""
    return 2 * lam.a * mu.a + 3 * (lam.a * mu.b + lam.b * mu.a) + 6 * lam.b * mu.b


class Character:
    """Finite weight-multiplicity map; zero entries are never stored."""

    __slots__ = ("mult",)

    def __init__(self, mult: dict[Weight, int] | None = None):
        self.mult: dict[Weight, int] = {}
        if mult:
            for k, v in mult.items():
                if v:
                    self.mult[k] = v

    @staticmethod
    def line(lam: Weight, m: int = 1) -> "Character":
        return Character({lam: m})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Character) and self.mult == other.mult

    def __hash__(self) -> int:
        return hash(frozenset(self.mult.items()))

    def __bool__(self) -> bool:
        return bool(self.mult)

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) + v
        return Character(out)

    def __sub__(self, other: "Character") -> "Character":
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) - v
        return Character(out)

    def scaled(self, n: int) -> "Character":
        return Character({k: n * v for k, v in self.mult.items()})

    def tensor(self, other: "Character") -> "Character":
        out: dict[Weight, int] = {}
        for k1, v1 in self.mult.items():
            for k2, v2 in other.mult.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return Character(out)

    def dual(self) -> "Character":
        return Character({-k: v for k, v in self.mult.items()})

    def stretch(self, n: int) -> "Character":
        """Scale every weight by n (Frobenius-twist style re-grading)."""
        return Character({k.scaled(n): v for k, v in self.mult.items()})

    def dimension(self) -> int:
        return sum(self.mult.values())

    def coeff(self, lam: Weight) -> int:
        return self.mult.get(lam, 0)

    def is_w_invariant(self) -> bool:
        for w in (weyl.S1, weyl.S2):
            for k, v in self.mult.items():
                if self.mult.get(weyl.act(w, k), 0) != v:
                    return False
        return True

    def support_max(self) -> Weight:
        """A dominance-maximal support weight, ties broken lexicographically."""
        maximal = [
            k
            for k in self.mult
            if not any(dominance_leq(k, m) and m != k for m in self.mult)
        ]
        return max(maximal)

    def to_json(self) -> list[list[int]]:
        return [[k.a, k.b, v] for k, v in sorted(self.mult.items())]

    @staticmethod
    def from_json(data: list[list[int]]) -> "Character":
        return Character({Weight(a, b): m for a, b, m in data})

    def __repr__(self) -> str:
        items = ", ".join(f"{k}:{v}" for k, v in sorted(self.mult.items()))
        return f"Character({{{items}}})"


TRIVIAL = Character.line(ZERO)


def _dominant_cone(lam: Weight) -> list[Weight]:
    """Dominant weights mu <= lam, sorted by decreasing height of lam - mu."""
    c1max = 2 * lam.a + 3 * lam.b
    c2max = lam.a + 2 * lam.b
    out = []
    for c2 in range(c2max + 1):
        for c1 in range(c1max + 1):
            mu = Weight(lam.a - 2 * c1 + 3 * c2, lam.b + c1 - 2 * c2)
            if mu.is_dominant() and dominance_leq(mu, lam):
                out.append(mu)
    out.sort(key=lambda mu: sum(root_coords(lam - mu)))
    return out


def dominant_conjugate(lam: Weight) -> Weight:
    nu = lam
    while not nu.is_dominant():
        if nu.a < 0:
            nu = weyl.act(weyl.S1, nu)
        else:
            nu = weyl.act(weyl.S2, nu)
    return nu


@lru_cache(maxsize=None)
def weyl_character(lam: Weight) -> Character:
    """Character of the costandard module with highest weight lam (Freudenthal)."""
    if not lam.is_dominant():
        raise ValueError(f"highest weight must be dominant, got {lam}")
    dom = _dominant_cone(lam)
    mults: dict[Weight, int] = {lam: 1}
    clam = inner(lam + RHO, lam + RHO)

    def mult_of(nu: Weight) -> int:
        return mults.get(dominant_conjugate(nu), 0)

    for mu in dom:
        if mu == lam:
            continue
        num = 0
        for alpha in POSITIVE_ROOTS:
            k = 1
            while True:
                m = mult_of(mu + alpha.weight.scaled(k))
                if m == 0:
                    break
                num += 2 * m * inner(mu + alpha.weight.scaled(k), alpha.weight)
                k += 1
        den = clam - inner(mu + RHO, mu + RHO)
        assert den > 0, (lam, mu)
        assert num % den == 0, (lam, mu, num, den)
        mults[mu] = num // den

    total: dict[Weight, int] = {}
    for mu, m in mults.items():
        seen = set()
        for w in weyl.ALL_ELEMENTS:
            nu = weyl.act(w, mu)
            if nu not in seen:
                seen.add(nu)
                total[nu] = m
    return Character(total)


def tensor(x: Character, y: Character) -> Character:
    return x.tensor(y)


def exterior_power(x: Character, k: int) -> Character:
    """k-th exterior power of a genuine (nonnegative) character."""
    if k < 0:
        raise ValueError("exterior power degree must be nonnegative")
    if any(v < 0 for v in x.mult.values()):
        raise ValueError("exterior power needs a genuine character")
    elems: list[Character] = [TRIVIAL] + [Character() for _ in range(k)]
    for mu, m in x.mult.items():
        for _ in range(m):
            for j in range(k, 0, -1):
                bumped = Character({w + mu: v for w, v in elems[j - 1].mult.items()})
                elems[j] = elems[j] + bumped
    return elems[k]


def dual_character(x: Character) -> Character:
    return x.dual()


class PString:
    """Parabolic costandard string with highest weight ``highest``."""

    __slots__ = ("parabolic", "highest")

    def __init__(self, parabolic: ParabolicId, highest: Weight):
        if parabolic.pair(highest) < 0:
            raise ValueError(
                f"invalid string: <{highest}, alpha_P^v> = {parabolic.pair(highest)} < 0"
            )
        self.parabolic = parabolic
        self.highest = highest

    @property
    def dim(self) -> int:
        return self.parabolic.pair(self.highest) + 1

    def weights(self) -> list[Weight]:
        alpha = self.parabolic.simple_root.weight
        return [self.highest - alpha.scaled(k) for k in range(self.dim)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PString)
            and self.parabolic is other.parabolic
            and self.highest == other.highest
        )

    def __hash__(self) -> int:
        return hash((self.parabolic, self.highest))

    def __repr__(self) -> str:
        return f"PString({self.parabolic.name}, {self.highest})"


def pstring_character(s: PString) -> Character:
    return Character({w: 1 for w in s.weights()})


def dual_pstring(s: PString) -> PString:
    """Dual string: highest weight is minus the lowest weight."""
    alpha = s.parabolic.simple_root.weight
    lowest = s.highest - alpha.scaled(s.parabolic.pair(s.highest))
    return PString(s.parabolic, -lowest)


@dataclass(frozen=True)
class FilteredPModule:
    """Ordered atoms of a costandard P-filtration, quotient end first."""

    parabolic: ParabolicId
    atoms: tuple[PString, ...]

    def __post_init__(self):
        for s in self.atoms:
            if s.parabolic is not self.parabolic:
                raise ValueError("atom parabolic mismatch")

    def character(self) -> Character:
        out = Character()
        for s in self.atoms:
            out = out + pstring_character(s)
        return out

    def dimension(self) -> int:
        return sum(s.dim for s in self.atoms)

    def twisted(self, nu: Weight) -> "FilteredPModule":
        """Tensor by the one-dimensional P-module of weight nu."""
        if self.parabolic.pair(nu) != 0:
            raise ValueError(f"{nu} is not a character of the parabolic")
        return FilteredPModule(
            self.parabolic,
            tuple(PString(self.parabolic, s.highest + nu) for s in self.atoms),
        )

    def dual(self) -> "FilteredPModule":
        return FilteredPModule(
            self.parabolic, tuple(dual_pstring(s) for s in reversed(self.atoms))
        )

    def drop(self, atom: PString, from_top: bool) -> "FilteredPModule":
        """Remove one named atom from the quotient or submodule end."""
        atoms = list(self.atoms)
        idx = 0 if from_top else len(atoms) - 1
        if atoms[idx] != atom:
            raise ValueError(f"atom {atom} is not at the requested end")
        del atoms[idx]
        return FilteredPModule(self.parabolic, tuple(atoms))


def atom(parabolic: ParabolicId, lam: Weight) -> PString:
    return PString(parabolic, lam)


def module(parabolic: ParabolicId, highs: list[Weight]) -> FilteredPModule:
    return FilteredPModule(parabolic, tuple(PString(parabolic, h) for h in highs))


def clebsch_gordan_P(x: PString, y: PString) -> FilteredPModule:
    """Costandard filtration of the tensor product of two strings."""
    if x.parabolic is not y.parabolic:
        raise ValueError("strings live over different parabolics")
    par = x.parabolic
    alpha = par.simple_root.weight
    r = min(par.pair(x.highest), par.pair(y.highest))
    top = x.highest + y.highest
    atoms = tuple(PString(par, top - alpha.scaled(k)) for k in range(r + 1))
    out = FilteredPModule(par, atoms)
    assert out.character() == pstring_character(x).tensor(pstring_character(y))
    return out


def tensor_filtered(x: FilteredPModule, y: FilteredPModule) -> FilteredPModule:
    """Atomwise Clebsch-Gordan filtration of a tensor of filtered modules."""
    if x.parabolic is not y.parabolic:
        raise ValueError("parabolic mismatch")
    atoms: list[PString] = []
    for sx in x.atoms:
        for sy in y.atoms:
            atoms.extend(clebsch_gordan_P(sx, sy).atoms)
    return FilteredPModule(x.parabolic, tuple(atoms))


class FiltrationError(ValueError):
    """Greedy string extraction hit a weight that is not P-dominant."""


def filter_character(char: Character, parabolic: ParabolicId) -> FilteredPModule:
    """Greedy costandard P-filtration of a genuine character."""
    rem = Character(dict(char.mult))
    atoms: list[PString] = []
    while rem:
        mu = rem.support_max()
        m = rem.coeff(mu)
        if m < 0 or parabolic.pair(mu) < 0:
            raise FiltrationError(f"cannot extract a string at {mu} (mult {m})")
        s = PString(parabolic, mu)
        atoms.extend([s] * m)
        rem = rem - pstring_character(s).scaled(m)
    out = FilteredPModule(parabolic, tuple(atoms))
    assert out.character() == char
    return out


@lru_cache(maxsize=None)
def restrict_to_P(lam: Weight, parabolic: ParabolicId) -> FilteredPModule:
    """Costandard P-filtration of the G-costandard module of highest weight lam."""
    return filter_character(weyl_character(lam), parabolic)


def decompose_costandard(char: Character) -> list[tuple[Weight, int]]:
    """Coefficients of a (virtual) character in the Weyl-character basis."""
    rem = Character(dict(char.mult))
    out: list[tuple[Weight, int]] = []
    while rem:
        mu = rem.support_max()
        if not mu.is_dominant():
            raise ValueError(f"maximal weight {mu} of a virtual character not dominant")
        c = rem.coeff(mu)
        out.append((mu, c))
        rem = rem - weyl_character(mu).scaled(c)
    return out
