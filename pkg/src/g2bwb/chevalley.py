"""Exact realization of G2 inside SO7 on integer matrices.

The ambient 7-dimensional quadratic space has basis indexed
``(1, 2, 3, 0, -3, -2, -1)`` and Gram matrix with ones on the antidiagonal
and a single 2 in the middle.  The embedding sends the two Chevalley
generator pairs to explicit so7 root matrices, the remaining root vectors
are produced by the bracket recipes with their exact 1/2 and 1/3 divisions,
and the twelve root subgroups are degree-two polynomial matrices equal to
the truncated exponentials of the images.

Everything runs over exact two-variable Laurent polynomials with rational
coefficients, so every identity (form preservation, determinant one, the
one-parameter law, torus conjugation, the stabilizer statements) is checked
as a polynomial identity, not at samples.  Reductions modulo small primes
rerun the group laws on integer matrices; the characteristic-2 degeneration
of the 7-dimensional module is detected there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootdata import POSITIVE_ROOTS, Root, Weight, pairing
from .charring import weyl_character

# ---------------------------------------------------------------------------
# exact Laurent polynomials in two variables (xi and zeta)

class Poly:
    """Laurent polynomial in (xi, zeta) with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        self.terms: dict[tuple[int, int], Fraction] = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    self.terms[k] = v

    @staticmethod
    def const(c) -> "Poly":
        return Poly({(0, 0): Fraction(c)})

    @staticmethod
    def coerce(v) -> "Poly":
        return v if isinstance(v, Poly) else Poly.const(v)

    def __add__(self, other):
        other = Poly.coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) + (-self)

    def __mul__(self, other):
        other = Poly.coerce(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + v1 * v2
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.terms == Poly.coerce(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.terms.values())

    def subs(self, xi, zeta) -> Fraction:
        out = Fraction(0)
        for (i, j), v in self.terms.items():
            out += v * Fraction(xi) ** i * Fraction(zeta) ** j
        return out

    def scale_var(self, e1: int, e2: int) -> "Poly":
        """Multiply by xi^e1 * zeta^e2."""
        return Poly({(i + e1, j + e2): v for (i, j), v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (i, j), v in sorted(self.terms.items()):
            s = str(v)
            if i:
                s += f"*x^{i}"
            if j:
                s += f"*z^{j}"
            bits.append(s)
        return " + ".join(bits)


XI = Poly({(1, 0): Fraction(1)})
ZETA = Poly({(0, 1): Fraction(1)})
ZETA_INV = Poly({(0, -1): Fraction(1)})
ONE = Poly.const(1)

# ---------------------------------------------------------------------------
# 7x7 matrices over Poly (or plain Fractions/ints)

INDEX_ORDER = (1, 2, 3, 0, -3, -2, -1)
POS = {label: k for k, label in enumerate(INDEX_ORDER)}

Mat = tuple  # 7-tuple of 7-tuples


def matunit(i: int, j: int, c=1) -> Mat:
    rows = [[Poly.const(0)] * 7 for _ in range(7)]
    rows[POS[i]][POS[j]] = Poly.const(c)
    return tuple(tuple(r) for r in rows)


def zero_mat() -> Mat:
    return tuple(tuple(Poly.const(0) for _ in range(7)) for _ in range(7))


def identity_mat() -> Mat:
    return tuple(
        tuple(Poly.const(1 if r == c else 0) for c in range(7)) for r in range(7)
    )


def madd(*ms: Mat) -> Mat:
    return tuple(
        tuple(sum((m[r][c] for m in ms), Poly.const(0)) for c in range(7))
        for r in range(7)
    )


def mneg(m: Mat) -> Mat:
    return tuple(tuple(-m[r][c] for c in range(7)) for r in range(7))


def msub(a: Mat, b: Mat) -> Mat:
    return madd(a, mneg(b))


def mscale(c, m: Mat) -> Mat:
    cc = Poly.coerce(c)
    return tuple(tuple(cc * m[r][k] for k in range(7)) for r in range(7))


def mmul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((ra[k] * cb[k] for k in range(7)), Poly.const(0)) for cb in bt)
        for ra in a
    )


def mtrans(m: Mat) -> Mat:
    return tuple(zip(*m))


def bracket(a: Mat, b: Mat) -> Mat:
    return msub(mmul(a, b), mmul(b, a))


def mequal(a: Mat, b: Mat) -> bool:
    return all(a[r][c] == b[r][c] for r in range(7) for c in range(7))


def is_zero_mat(m: Mat) -> bool:
    return all(not m[r][c] for r in range(7) for c in range(7))


def det7(m: Mat) -> Poly:
    """Determinant by minor expansion with memo on column subsets."""
    cols = tuple(range(7))

    memo: dict[tuple[int, tuple[int, ...]], Poly] = {}

    def minor(r: int, cs: tuple[int, ...]) -> Poly:
        if not cs:
            return Poly.const(1)
        key = (r, cs)
        if key in memo:
            return memo[key]
        acc = Poly.const(0)
        for idx, c in enumerate(cs):
            term = m[r][c] * minor(r + 1, cs[:idx] + cs[idx + 1:])
            acc = acc + (term if idx % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return minor(0, cols)


def to_int_matrix(m: Mat, xi, zeta=1) -> list[list[Fraction]]:
    return [[m[r][c].subs(xi, zeta) for c in range(7)] for r in range(7)]


def mat_to_json(m: Mat) -> list[list[str]]:
    return [[repr(m[r][c]) for c in range(7)] for r in range(7)]


# Gram matrix of the quadratic form, antidiagonal ones with central 2.
GRAM: Mat = madd(
    *[matunit(i, -i) for i in (1, 2, 3, -3, -2, -1)], matunit(0, 0, 2)
)


def preserves_form(g: Mat) -> bool:
    return mequal(mmul(mtrans(g), mmul(GRAM, g)), GRAM)


def in_orthogonal_lie_algebra(x: Mat) -> bool:
    return is_zero_mat(madd(mmul(mtrans(x), GRAM), mmul(GRAM, x)))


# ---------------------------------------------------------------------------
# the so7 Chevalley basis and the embedded G2 basis

E1P = msub(matunit(1, 2), matunit(-2, -1))
E2P = msub(matunit(2, 3), matunit(-3, -2))
E3P = msub(mscale(2, matunit(3, 0)), matunit(0, -3))
F1P = msub(matunit(2, 1), matunit(-1, -2))
F2P = msub(matunit(3, 2), matunit(-2, -3))
F3P = msub(matunit(0, 3), mscale(2, matunit(-3, 0)))


def so7_basis() -> list[Mat]:
    """The 21 basis matrices: root vectors plus the three Cartan brackets."""
    out: list[Mat] = []
    for i, j in ((1, 2), (1, 3), (2, 3)):
        out.append(msub(matunit(i, j), matunit(-j, -i)))
        out.append(msub(matunit(j, i), matunit(-i, -j)))
        out.append(msub(matunit(i, -j), matunit(j, -i)))
        out.append(msub(matunit(-j, i), matunit(-i, j)))
    for k in (1, 2, 3):
        out.append(msub(mscale(2, matunit(k, 0)), matunit(0, -k)))
        out.append(msub(matunit(0, k), mscale(2, matunit(-k, 0))))
    for e, f in ((E1P, F1P), (E2P, F2P), (E3P, F3P)):
        out.append(bracket(e, f))
    return out


def _exact_scale(c: Fraction, m: Mat) -> Mat:
    out = mscale(c, m)
    for r in range(7):
        for k in range(7):
            if not out[r][k].is_integral():
                raise ArithmeticError("non-exact division in a Chevalley bracket")
    return out


# ordering of the positive roots as in rootdata.POSITIVE_ROOTS
_A1, _A2, _A12, _A112, _A1112, _A11122 = POSITIVE_ROOTS


@lru_cache(maxsize=None)
def theta() -> dict[tuple[str, object], Mat]:
    """Images of the fourteen G2 basis elements, from the generators and the
    bracket recipes; the 1/2 and 1/3 divisions must be exact."""
    e1 = madd(E1P, E3P)
    e2 = E2P
    f1 = madd(F1P, F3P)
    f2 = F2P
    e12 = bracket(e1, e2)
    e112 = _exact_scale(Fraction(1, 2), bracket(e1, e12))
    e1112 = _exact_scale(Fraction(1, 3), bracket(e1, e112))
    e11122 = bracket(e2, e1112)
    f12 = mneg(bracket(f1, f2))
    f112 = _exact_scale(Fraction(-1, 2), bracket(f1, f12))
    f1112 = _exact_scale(Fraction(-1, 3), bracket(f1, f112))
    f11122 = mneg(bracket(f2, f1112))
    h1 = bracket(e1, f1)
    h2 = bracket(e2, f2)
    return {
        ("e", _A1): e1, ("e", _A2): e2, ("e", _A12): e12, ("e", _A112): e112,
        ("e", _A1112): e1112, ("e", _A11122): e11122,
        ("f", _A1): f1, ("f", _A2): f2, ("f", _A12): f12, ("f", _A112): f112,
        ("f", _A1112): f1112, ("f", _A11122): f11122,
        ("h", 1): h1, ("h", 2): h2,
    }


# closed-form constants for the non-generator images, independent data
# used to cross-check the bracket recipes
def _reference_images() -> dict[tuple[str, Root], Mat]:
    return {
        ("e", _A12): msub(msub(matunit(1, 3), matunit(-3, -1)),
                          msub(mscale(2, matunit(2, 0)), matunit(0, -2))),
        ("e", _A112): msub(mneg(msub(mscale(2, matunit(1, 0)), matunit(0, -1))),
                           msub(matunit(2, -3), matunit(3, -2))),
        ("e", _A1112): mneg(msub(matunit(1, -3), matunit(3, -1))),
        ("e", _A11122): mneg(msub(matunit(1, -2), matunit(2, -1))),
        ("f", _A12): madd(mneg(msub(matunit(0, 2), mscale(2, matunit(-2, 0)))),
                          msub(matunit(3, 1), matunit(-1, -3))),
        ("f", _A112): msub(mneg(msub(matunit(0, 1), mscale(2, matunit(-1, 0)))),
                           msub(matunit(-3, 2), matunit(-2, 3))),
        ("f", _A1112): mneg(msub(matunit(-3, 1), matunit(-1, 3))),
        ("f", _A11122): mneg(msub(matunit(-2, 1), matunit(-1, 2))),
    }


CARTAN = {(1, 1): 2, (1, 2): -3, (2, 1): -1, (2, 2): 2}  # <alpha_j, alpha_i^v> at (i, j)


@dataclass(frozen=True)
class CheckReport:
    name: str
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def failures(self) -> list[str]:
        return [label for label, ok in self.checks if not ok]

    def to_text(self) -> str:
        lines = [f"{self.name}:"]
        for label, ok in self.checks:
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {label}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checks": [{"label": l, "ok": ok} for l, ok in self.checks],
            "passed": self.passed,
        }


def _solve_in_span(basis: list[Mat], target: Mat) -> list[Fraction] | None:
    """Coordinates of target in the rational span of basis, or None."""
    vecs = [[m[r][c].terms.get((0, 0), Fraction(0)) for r in range(7) for c in range(7)]
            for m in basis]
    tv = [target[r][c].terms.get((0, 0), Fraction(0)) for r in range(7) for c in range(7)]
    cols = len(basis)
    rows = 49
    aug = [[vecs[j][i] for j in range(cols)] + [tv[i]] for i in range(rows)]
    piv = 0
    pivots = []
    for col in range(cols):
        sel = next((r for r in range(piv, rows) if aug[r][col]), None)
        if sel is None:
            continue
        aug[piv], aug[sel] = aug[sel], aug[piv]
        inv = 1 / aug[piv][col]
        aug[piv] = [x * inv for x in aug[piv]]
        for r in range(rows):
            if r != piv and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[piv])]
        pivots.append(col)
        piv += 1
    # consistency
    for r in range(piv, rows):
        if aug[r][cols]:
            return None
    sol = [Fraction(0)] * cols
    for r, col in enumerate(pivots):
        sol[col] = aug[r][cols]
    return sol


def _as_int_matrix(m: Mat) -> tuple[tuple[int, ...], ...]:
    out = []
    for r in range(7):
        row = []
        for c in range(7):
            v = m[r][c].terms.get((0, 0), Fraction(0))
            assert v.denominator == 1
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def _ibracket(a, b):
    ab = tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(7)) for c in range(7))
        for r in range(7)
    )
    ba = tuple(
        tuple(sum(b[r][k] * a[k][c] for k in range(7)) for c in range(7))
        for r in range(7)
    )
    return tuple(
        tuple(ab[r][c] - ba[r][c] for c in range(7)) for r in range(7)
    )


def _iadd(*ms):
    return tuple(
        tuple(sum(m[r][c] for m in ms) for c in range(7)) for r in range(7)
    )


def _iscale(s, m):
    return tuple(tuple(s * m[r][c] for c in range(7)) for r in range(7))


_IZERO = tuple(tuple(0 for _ in range(7)) for _ in range(7))


def verify_embedding() -> CheckReport:
    """Linear independence, bracket closure, Chevalley relations, grading."""
    th = theta()
    checks: list[tuple[str, bool]] = []

    checks.append((
        "all 21 so7 basis matrices satisfy X^t B + B X = 0",
        all(in_orthogonal_lie_algebra(x) for x in so7_basis()),
    ))
    checks.append((
        "all 14 images lie in the orthogonal Lie algebra",
        all(in_orthogonal_lie_algebra(x) for x in th.values()),
    ))

    reference = _reference_images()
    checks.append((
        "bracket-generated images match the closed-form constants",
        all(mequal(th[k], m) for k, m in reference.items()),
    ))

    basis = list(th.values())
    checks.append(("the 14 images are linearly independent",
                   _rank_of(basis) == 14))

    ib = [_as_int_matrix(m) for m in basis]
    closure_ok = True
    integral_ok = True
    for i in range(14):
        for j in range(14):
            br = bracket(basis[i], basis[j])
            coords = _solve_in_span(basis, br)
            if coords is None:
                closure_ok = False
            elif any(c.denominator != 1 for c in coords):
                integral_ok = False
    checks.append(("brackets of images close in the span", closure_ok))
    checks.append(("structure constants are integers", integral_ok))

    hi = {1: _as_int_matrix(th[("h", 1)]), 2: _as_int_matrix(th[("h", 2)])}
    ei = {1: _as_int_matrix(th[("e", _A1)]), 2: _as_int_matrix(th[("e", _A2)])}
    fi = {1: _as_int_matrix(th[("f", _A1)]), 2: _as_int_matrix(th[("f", _A2)])}
    rel_ok = True
    for i in (1, 2):
        for j in (1, 2):
            rhs = hi[i] if i == j else _IZERO
            if _ibracket(ei[i], fi[j]) != rhs:
                rel_ok = False
            if _ibracket(hi[i], ei[j]) != _iscale(CARTAN[(i, j)], ei[j]):
                rel_ok = False
            if _ibracket(hi[i], fi[j]) != _iscale(-CARTAN[(i, j)], fi[j]):
                rel_ok = False
    checks.append(("Chevalley generator relations hold", rel_ok))
    checks.append(("the two Cartan images commute",
                   _ibracket(hi[1], hi[2]) == _IZERO))

    grading_ok = True
    for alpha in POSITIVE_ROOTS:
        for i in (1, 2):
            coeff = pairing(alpha.weight, POSITIVE_ROOTS[i - 1])
            if _ibracket(hi[i], _as_int_matrix(th[("e", alpha)])) != _iscale(
                coeff, _as_int_matrix(th[("e", alpha)])
            ):
                grading_ok = False
            if _ibracket(hi[i], _as_int_matrix(th[("f", alpha)])) != _iscale(
                -coeff, _as_int_matrix(th[("f", alpha)])
            ):
                grading_ok = False
    checks.append(("root-space grading under both Cartan images", grading_ok))

    jacobi_ok = True
    pair_brackets = {}
    for i in range(14):
        for j in range(14):
            pair_brackets[(i, j)] = _ibracket(ib[i], ib[j])
    for i in range(14):
        for j in range(i + 1, 14):
            if pair_brackets[(i, j)] != _iscale(-1, pair_brackets[(j, i)]):
                jacobi_ok = False
            for k in range(j + 1, 14):
                s = _iadd(
                    _ibracket(ib[i], pair_brackets[(j, k)]),
                    _ibracket(ib[j], pair_brackets[(k, i)]),
                    _ibracket(ib[k], pair_brackets[(i, j)]),
                )
                if s != _IZERO:
                    jacobi_ok = False
    checks.append(("antisymmetry and the Jacobi identity on all triples", jacobi_ok))

    return CheckReport("Lie algebra embedding", tuple(checks))


def _rank_of(ms: list[Mat]) -> int:
    vecs = [[m[r][c].terms.get((0, 0), Fraction(0)) for r in range(7) for c in range(7)]
            for m in ms]
    rank = 0
    cols = 49
    piv_rows = []
    work = [list(v) for v in vecs]
    for col in range(cols):
        sel = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                fct = work[r][col]
                work[r] = [a - fct * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# root subgroups (closed forms) and coroots

def _closed_form(terms1: list[tuple[int, int, int]],
                 terms2: list[tuple[int, int, int]]) -> tuple[Mat, Mat, Mat]:
    """Coefficient matrices (order 0, 1, 2 in the parameter)."""
    c1 = zero_mat()
    for i, j, c in terms1:
        c1 = madd(c1, matunit(i, j, c))
    c2 = zero_mat()
    for i, j, c in terms2:
        c2 = madd(c2, matunit(i, j, c))
    return identity_mat(), c1, c2


_SUBGROUP_DATA: dict[tuple[Weight, bool], tuple[Mat, Mat, Mat]] = {}


def _init_subgroups() -> None:
    d = _SUBGROUP_DATA
    if d:
        return
    d[(_A1.weight, True)] = _closed_form(
        [(1, 2, 1), (3, 0, 2), (0, -3, -1), (-2, -1, -1)], [(3, -3, -1)])
    d[(_A2.weight, True)] = _closed_form([(2, 3, 1), (-3, -2, -1)], [])
    d[(_A12.weight, True)] = _closed_form(
        [(1, 3, 1), (2, 0, -2), (0, -2, 1), (-3, -1, -1)], [(2, -2, -1)])
    d[(_A112.weight, True)] = _closed_form(
        [(1, 0, -2), (2, -3, -1), (3, -2, 1), (0, -1, 1)], [(1, -1, -1)])
    d[(_A1112.weight, True)] = _closed_form([(1, -3, -1), (3, -1, 1)], [])
    d[(_A11122.weight, True)] = _closed_form([(1, -2, -1), (2, -1, 1)], [])
    d[(_A1.weight, False)] = _closed_form(
        [(2, 1, 1), (0, 3, 1), (-3, 0, -2), (-1, -2, -1)], [(-3, 3, -1)])
    d[(_A2.weight, False)] = _closed_form([(3, 2, 1), (-2, -3, -1)], [])
    d[(_A12.weight, False)] = _closed_form(
        [(3, 1, 1), (0, 2, -1), (-2, 0, 2), (-1, -3, -1)], [(-2, 2, -1)])
    d[(_A112.weight, False)] = _closed_form(
        [(0, 1, -1), (-3, 2, -1), (-2, 3, 1), (-1, 0, 2)], [(-1, 1, -1)])
    d[(_A1112.weight, False)] = _closed_form([(-3, 1, -1), (-1, 3, 1)], [])
    d[(_A11122.weight, False)] = _closed_form([(-2, 1, -1), (-1, 2, 1)], [])


def root_subgroup(alpha: Root, xi, positive: bool = True) -> Mat:
    """Closed-form root subgroup element at an exact or symbolic parameter."""
    _init_subgroups()
    c0, c1, c2 = _SUBGROUP_DATA[(alpha.weight, positive)]
    x = Poly.coerce(xi)
    return madd(c0, mscale(x, c1), mscale(x * x, c2))


def nilpotent_exponential(n: Mat, xi) -> Mat:
    """exp(xi n) for n with n^3 = 0; the half division must be exact."""
    n2 = mmul(n, n)
    assert is_zero_mat(mmul(n2, n)), "matrix is not nilpotent of order <= 3"
    x = Poly.coerce(xi)
    half = _exact_scale(Fraction(1, 2), n2)
    return madd(identity_mat(), mscale(x, n), mscale(x * x, half))


def coroot(i: int, zeta=None) -> Mat:
    """alpha_i^v(zeta) built from the Chevalley n-elements; zeta symbolic by default."""
    if i not in (1, 2):
        raise ValueError("coroot index must be 1 or 2")
    z = ZETA if zeta is None else Poly.coerce(zeta)
    if not z:
        raise ZeroDivisionError("the coroot needs an invertible argument")
    if zeta is None:
        zinv = ZETA_INV
    else:
        zinv = Poly.const(1 / Fraction(zeta))
    alpha = POSITIVE_ROOTS[i - 1]

    def n_alpha(t, tinv):
        a = root_subgroup(alpha, t, True)
        b = root_subgroup(alpha, -tinv, False)
        return mmul(mmul(a, b), a)

    return mmul(n_alpha(z, zinv), n_alpha(Poly.const(-1), Poly.const(-1)))


def coroot_diagonal_exponents(i: int) -> list[int]:
    """Exponent of zeta at each diagonal entry of alpha_i^v(zeta)."""
    m = coroot(i)
    out = []
    for k in range(7):
        entry = m[k][k]
        assert len(entry.terms) == 1, "coroot is not diagonal"
        (e1, e2), c = next(iter(entry.terms.items()))
        assert e1 == 0 and c == 1
        out.append(e2)
    for r in range(7):
        for c in range(7):
            if r != c:
                assert not m[r][c], "coroot is not diagonal"
    return out


def weight_table() -> dict[int, Weight]:
    """Torus weight of each basis vector, read off the two coroot diagonals."""
    d1 = coroot_diagonal_exponents(1)
    d2 = coroot_diagonal_exponents(2)
    return {INDEX_ORDER[k]: Weight(d1[k], d2[k]) for k in range(7)}


# ---------------------------------------------------------------------------
# verification reports

_EXPECTED_COROOTS = {
    1: [1, -1, 2, 0, -2, 1, -1],
    2: [0, 1, -1, 0, 1, -1, 0],
}

_EXPECTED_WEIGHTS = {
    1: Weight(1, 0), 2: Weight(-1, 1), 3: Weight(2, -1), 0: Weight(0, 0),
    -3: Weight(-2, 1), -2: Weight(1, -1), -1: Weight(-1, 0),
}


def verify_subgroups() -> CheckReport:
    """Closed forms versus exponentials, form preservation, determinant one,
    the one-parameter law and torus conjugation, all as polynomial identities."""
    th = theta()
    checks: list[tuple[str, bool]] = []

    exp_ok = True
    form_ok = True
    det_ok = True
    add_ok = True
    for alpha in POSITIVE_ROOTS:
        for positive in (True, False):
            y = th[("e" if positive else "f", alpha)]
            g = root_subgroup(alpha, XI, positive)
            if not mequal(g, nilpotent_exponential(y, XI)):
                exp_ok = False
            if not preserves_form(g):
                form_ok = False
            if det7(g) != ONE:
                det_ok = False
            # one-parameter law with two independent symbols
            gx = root_subgroup(alpha, XI, positive)
            gz = root_subgroup(alpha, ZETA, positive)
            gxz = root_subgroup(alpha, XI + ZETA, positive)
            if not mequal(mmul(gx, gz), gxz):
                add_ok = False
    checks.append(("closed forms equal the truncated exponentials", exp_ok))
    checks.append(("g^t B g = B for all twelve subgroups, symbolically", form_ok))
    checks.append(("det g = 1 for all twelve subgroups, symbolically", det_ok))
    checks.append(("one-parameter law x(s) x(t) = x(s+t)", add_ok))

    conj_ok = True
    for i in (1, 2):
        t = coroot(i)
        tinv = tuple(
            tuple(Poly({(e1, -e2): c for (e1, e2), c in t[r][k].terms.items()})
                  for k in range(7))
            for r in range(7)
        )
        for alpha in POSITIVE_ROOTS:
            for positive in (True, False):
                k = pairing(alpha.weight, POSITIVE_ROOTS[i - 1])
                if not positive:
                    k = -k
                lhs = mmul(mmul(t, root_subgroup(alpha, XI, positive)), tinv)
                rhs = root_subgroup(alpha, XI.scale_var(0, k), positive)
                if not mequal(lhs, rhs):
                    conj_ok = False
    checks.append(("torus conjugation rescales by zeta^<beta, alpha^v>", conj_ok))

    checks.append((
        "coroot diagonals match the expected exponents",
        all(coroot_diagonal_exponents(i) == _EXPECTED_COROOTS[i] for i in (1, 2)),
    ))
    wt = weight_table()
    checks.append((
        "weight table matches the expected torus weights",
        all(wt[k] == _EXPECTED_WEIGHTS[k] for k in INDEX_ORDER),
    ))
    support = weyl_character(Weight(1, 0)).mult
    checks.append((
        "weight multiset equals the 7-dimensional module's support",
        sorted(wt.values()) == sorted(support) and all(support[w] == 1 for w in wt.values()),
    ))
    return CheckReport("root subgroups and coroots", tuple(checks))


def verify_mod_p(primes: tuple[int, ...] = (3, 5, 7, 11, 13),
                 samples: tuple[int, ...] = (1, 2, 3)) -> CheckReport:
    """Rerun the group laws on integer matrices reduced modulo small primes,
    and detect the characteristic-2 degeneration of the ambient module."""
    checks: list[tuple[str, bool]] = []

    def gmat(alpha, xi, positive):
        return [[int(v) for v in row]
                for row in to_int_matrix(root_subgroup(alpha, xi, positive), xi)]

    def modmul(a, b, p):
        return [[sum(a[r][k] * b[k][c] for k in range(7)) % p for c in range(7)]
                for r in range(7)]

    gram = [[int(GRAM[r][c].subs(0, 0)) for c in range(7)] for r in range(7)]

    for p in primes:
        ok = True
        for alpha in POSITIVE_ROOTS:
            for positive in (True, False):
                for s in samples:
                    for t in samples:
                        a = [[v % p for v in row] for row in gmat(alpha, s, positive)]
                        b = [[v % p for v in row] for row in gmat(alpha, t, positive)]
                        c = [[v % p for v in row] for row in gmat(alpha, s + t, positive)]
                        if modmul(a, b, p) != c:
                            ok = False
                        gt = [list(r) for r in zip(*a)]
                        if modmul(modmul(gt, gram, p), a, p) != [[x % p for x in row] for row in gram]:
                            ok = False
        checks.append((f"group laws and form preservation hold mod {p}", ok))

    def fixes_center_line(p: int) -> bool:
        col = POS[0]
        for alpha in POSITIVE_ROOTS:
            for positive in (True, False):
                g = gmat(alpha, 1, positive)
                for r in range(7):
                    if r != col and g[r][col] % p:
                        return False
        return True

    checks.append(("characteristic 2 stabilizes the central line", fixes_center_line(2)))
    checks.append((
        "odd characteristics move the central line",
        all(not fixes_center_line(p) for p in primes),
    ))
    return CheckReport("reductions modulo small primes", tuple(checks))


def stabilizer_check() -> CheckReport:
    """Which root subgroups fix the distinguished line and plane."""
    checks: list[tuple[str, bool]] = []

    def column(g: Mat, label: int) -> list[Poly]:
        c = POS[label]
        return [g[r][c] for r in range(7)]

    def fixes_line(g: Mat) -> bool:
        col = column(g, -1)
        return all(not col[r] for r in range(7) if r != POS[-1]) and col[POS[-1]] == ONE

    def preserves_plane(g: Mat) -> bool:
        for label in (-2, -1):
            col = column(g, label)
            for r in range(7):
                if r not in (POS[-2], POS[-1]) and col[r]:
                    return False
        return True

    long_parabolic = [(alpha, False) for alpha in POSITIVE_ROOTS] + [(_A2, True)]
    long_outside = [(alpha, True) for alpha in POSITIVE_ROOTS if alpha is not _A2]
    ok_fix = all(fixes_line(root_subgroup(a, XI, pos)) for a, pos in long_parabolic)
    ok_move = all(not fixes_line(root_subgroup(a, XI, pos)) for a, pos in long_outside)
    checks.append(("the long-root parabolic fixes the last line", ok_fix))
    checks.append(("complementary subgroups move the last line", ok_move))

    short_parabolic = [(alpha, False) for alpha in POSITIVE_ROOTS] + [(_A1, True)]
    short_outside = [(alpha, True) for alpha in POSITIVE_ROOTS if alpha is not _A1]
    ok_plane = all(preserves_plane(root_subgroup(a, XI, pos)) for a, pos in short_parabolic)
    ok_plane_move = all(
        not preserves_plane(root_subgroup(a, XI, pos)) for a, pos in short_outside
    )
    checks.append(("the short-root parabolic preserves the last plane", ok_plane))
    checks.append(("complementary subgroups move the last plane", ok_plane_move))

    checks.append(("the identity fixes everything",
                   fixes_line(identity_mat()) and preserves_plane(identity_mat())))
    return CheckReport("stabilizers of the distinguished line and plane", tuple(checks))


def verify_group_relations(samples: tuple[int, ...] = (1, 2, 3),
                           primes: tuple[int, ...] = (3, 5, 7, 11, 13)) -> CheckReport:
    """Symbolic group laws plus their rerun on integer matrices modulo the
    given primes at the given parameter samples."""
    sym = verify_subgroups()
    modp = verify_mod_p(primes, samples)
    return CheckReport("group relations", sym.checks + modp.checks)


def chevalley_verify() -> list[CheckReport]:
    """All matrix-realization checks: embedding, subgroups, mod-p, stabilizers."""
    return [verify_embedding(), verify_subgroups(), verify_mod_p(), stabilizer_check()]
