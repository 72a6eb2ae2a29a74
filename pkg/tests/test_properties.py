"""Property-based suites over randomly sampled weights and group elements."""

from hypothesis import given, settings, strategies as st

from g2bwb.rootdata import (
    POSITIVE_ROOTS,
    RHO,
    ParabolicId,
    Weight,
    dominance_leq,
    pairing,
    restricted_split,
)
from g2bwb.charring import (
    PString,
    clebsch_gordan_P,
    dual_pstring,
    pstring_character,
    weyl_character,
)
from g2bwb.cohomology import affine_normal_form, bott_line, linked
from g2bwb import weyl

coords = st.integers(min_value=-8, max_value=8)
weights = st.builds(Weight, coords, coords)
small_dominant = st.builds(Weight, st.integers(0, 4), st.integers(0, 3))
elements = st.sampled_from(weyl.ALL_ELEMENTS)
primes = st.sampled_from([2, 3, 5, 7, 11, 13])


@given(weights, weights, st.sampled_from(POSITIVE_ROOTS))
def test_pairing_linearity(lam, mu, alpha):
    assert pairing(lam + mu, alpha) == pairing(lam, alpha) + pairing(mu, alpha)


@given(weights, weights)
def test_dominance_antisymmetry(lam, mu):
    if dominance_leq(lam, mu) and dominance_leq(mu, lam):
        assert lam == mu


@given(weights, primes)
def test_restricted_split_roundtrip(lam, p):
    lam0, lam1 = restricted_split(lam, p)
    assert lam0 + lam1.scaled(p) == lam
    assert 0 <= lam0.a < p and 0 <= lam0.b < p


@given(elements, elements, weights)
def test_dot_action_compatibility(x, y, lam):
    assert weyl.dot(x * y, lam) == weyl.dot(x, weyl.dot(y, lam))


@given(elements, weights)
def test_act_preserves_pairing_structure(w, lam):
    # the action permutes the root system, so the multiset of pairings is stable
    vals = sorted(abs(pairing(lam, a)) for a in POSITIVE_ROOTS)
    moved = sorted(abs(pairing(weyl.act(w, lam), a)) for a in POSITIVE_ROOTS)
    assert vals == moved


@settings(deadline=None)
@given(small_dominant)
def test_weyl_characters_are_w_invariant(lam):
    assert weyl_character(lam).is_w_invariant()


@settings(deadline=None)
@given(elements, st.builds(Weight, st.integers(-4, 4), st.integers(-4, 4)))
def test_euler_invariance(w, lam):
    r1 = bott_line(weyl.dot(w, lam))
    r2 = bott_line(lam)
    assert r1.vanishes == r2.vanishes
    if not r1.vanishes:
        assert r1.weight == r2.weight
        assert (r1.degree - r2.degree - w.length) % 2 == 0


@given(weights, weights, weights)
def test_linkage_equivalence(x, y, z):
    p = 11
    assert linked(x, x, p)
    assert linked(x, y, p) == linked(y, x, p)
    if linked(x, y, p) and linked(y, z, p):
        assert linked(x, z, p)


@given(weights)
def test_normal_form_idempotent(lam):
    p = 11
    nf = affine_normal_form(lam + RHO, p)
    assert affine_normal_form(nf, p) == nf
    assert nf.is_dominant()
    assert 2 * nf.a + 3 * nf.b <= p


@given(st.sampled_from([ParabolicId.SHORT, ParabolicId.LONG]), weights)
def test_dual_pstring_involution(par, lam):
    if par.pair(lam) < 0:
        lam = -lam
    s = PString(par, lam)
    assert dual_pstring(dual_pstring(s)) == s
    assert pstring_character(dual_pstring(s)) == pstring_character(s).dual()


@settings(deadline=None, max_examples=40)
@given(
    st.sampled_from([ParabolicId.SHORT, ParabolicId.LONG]),
    st.integers(0, 4), st.integers(-4, 2), st.integers(0, 4), st.integers(-4, 2),
)
def test_clebsch_gordan_additive(par, h1, t1, h2, t2):
    if par is ParabolicId.SHORT:
        x = PString(par, Weight(h1, t1))
        y = PString(par, Weight(h2, t2))
    else:
        x = PString(par, Weight(t1, h1))
        y = PString(par, Weight(t2, h2))
    out = clebsch_gordan_P(x, y)
    assert out.character() == pstring_character(x).tensor(pstring_character(y))
