from collections import Counter

import pytest

from g2bwb.rootdata import POSITIVE_ROOTS, RHO, W1, W2, ZERO, ParabolicId, Weight
from g2bwb.charring import module
from g2bwb.cohomology import (
    CohomologyTable,
    EulerMismatch,
    affine_normal_form,
    bott_line,
    certify,
    cohomology_filtered,
    intersect_tables,
    linked,
    lowest_alcove,
    weyl_euler,
)
from g2bwb.modchar import weyl_dim
from g2bwb import weyl

SHORT = ParabolicId.SHORT


def test_bott_examples():
    r = bott_line(Weight(3, -2))
    assert (r.degree, r.weight) == (1, ZERO)
    assert bott_line(Weight(1, -1)).vanishes
    r = bott_line(Weight(4, -3))
    assert (r.degree, r.weight) == (2, ZERO)
    for lam in (ZERO, W1, W2, Weight(3, 2)):
        r = bott_line(lam)
        assert (r.degree, r.weight) == (0, lam)


def test_bott_degree_bound():
    for a in range(-6, 7):
        for b in range(-6, 7):
            r = bott_line(Weight(a, b))
            if not r.vanishes:
                assert 0 <= r.degree <= 6
                assert r.weight.is_dominant()


def test_bott_vanishing_iff_singular():
    for a in range(-6, 7):
        for b in range(-6, 7):
            lam = Weight(a, b)
            singular = any(alpha.pair(lam + RHO) == 0 for alpha in POSITIVE_ROOTS)
            assert bott_line(lam).vanishes == singular


def test_euler_invariance_under_dot():
    # chi(w.lam) = (-1)^len(w) chi(lam) as virtual characters
    box = [Weight(a, b) for a in range(-2, 4) for b in range(-2, 3)]
    for w in weyl.ALL_ELEMENTS:
        for lam in box:
            left = weyl_euler(weyl.dot(w, lam))
            right = weyl_euler(lam)
            if right is None:
                assert left is None
            else:
                sign, wt = right
                assert left == ((-1) ** w.length * sign, wt)


def test_serre_duality_dimensions():
    # dim H^i(lam) = dim H^{6-i}(-lam-2rho) on a box
    for a in range(-5, 6):
        for b in range(-5, 6):
            lam = Weight(a, b)
            dual = -lam - RHO.scaled(2)
            r1, r2 = bott_line(lam), bott_line(dual)
            assert r1.vanishes == r2.vanishes
            if not r1.vanishes:
                assert r1.degree + r2.degree == 6
                assert weyl_dim(r1.weight) == weyl_dim(r2.weight)


def test_lowest_alcove():
    assert lowest_alcove(RHO, 11)
    assert lowest_alcove(ZERO, 11)
    assert not lowest_alcove(Weight(2, 1), 11)  # pairing 12 on the big wall
    assert lowest_alcove(Weight(2, 0), 11)      # pairing 11: closure included
    assert lowest_alcove(Weight(3, 0), 11)      # pairing 11 exactly


def test_linked_examples():
    assert linked(Weight(3, 3), Weight(3, 3), 11)
    assert not linked(RHO, Weight(2, 0), 11)
    assert not linked(ZERO, W2, 11)
    # the dot orbit of zero is linked to zero
    for w in weyl.ALL_ELEMENTS:
        assert linked(ZERO, weyl.dot(w, ZERO), 11)


def _orbit_oracle(lam: Weight, p: int, box: int) -> set[Weight]:
    # brute-force closure of the p-dot affine action inside a box
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            x = mu + RHO
            for alpha in POSITIVE_ROOTS:
                t = alpha.pair(x)
                base = (t // p) * p
                for mp in (base, base + p):
                    img = x - alpha.weight.scaled(t - mp)
                    nu = img - RHO
                    if abs(nu.a) > box or abs(nu.b) > box:
                        continue
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
        frontier = nxt
    return seen


def test_linked_matches_orbit_oracle():
    p = 11
    orbit = _orbit_oracle(ZERO, p, 16)
    for lam in orbit:
        assert linked(ZERO, lam, p)
    for a in range(-6, 7):
        for b in range(-6, 7):
            lam = Weight(a, b)
            if linked(ZERO, lam, p):
                assert lam in orbit


def test_linked_is_equivalence():
    p = 11
    box = [Weight(a, b) for a in range(-4, 5) for b in range(-4, 5)]
    for lam in box:
        assert linked(lam, lam, p)
    import random
    rng = random.Random(7)
    for _ in range(300):
        x, y, z = rng.choice(box), rng.choice(box), rng.choice(box)
        assert linked(x, y, p) == linked(y, x, p)
        if linked(x, y, p) and linked(y, z, p):
            assert linked(x, z, p)


def test_normal_form_idempotent_and_dot_invariant():
    p = 11
    for a in range(-5, 6):
        for b in range(-5, 6):
            x = Weight(a, b)
            nf = affine_normal_form(x, p)
            assert affine_normal_form(nf, p) == nf
            for w in (weyl.S1, weyl.S2, weyl.LONGEST):
                assert affine_normal_form(weyl.act(w, x), p) == nf


def test_cohomology_filtered_examples():
    t = cohomology_filtered(module(SHORT, [Weight(2, -1), ZERO]))
    assert t.exact
    assert t.entries(0) == (ZERO,)
    assert t.max_degree() == 0

    t = cohomology_filtered(module(SHORT, [RHO, Weight(2, 0)]))
    assert t.exact
    assert Counter(t.entries(0)) == Counter([RHO, Weight(2, 0)])

    t = cohomology_filtered(module(SHORT, [ZERO]))
    assert t.exact and t.entries(0) == (ZERO,)


def test_cohomology_filtered_atom_order_irrelevant():
    atoms = [Weight(2, -2), Weight(0, -1), Weight(3, -3), Weight(0, -2)]
    t1 = cohomology_filtered(module(SHORT, atoms))
    t2 = cohomology_filtered(module(SHORT, list(reversed(atoms))))
    assert t1.degrees == t2.degrees
    assert t1.euler == t2.euler


def test_cohomology_filtered_flags_ambiguity():
    # one atom in degree 0 and a linked one in degree 1: only a bound
    t = cohomology_filtered(module(SHORT, [ZERO, Weight(3, -2)]))
    assert not t.exact


def test_certify_unique_and_ambiguous():
    b = {0: Counter({ZERO: 1}), 1: Counter({W1: 1})}
    out, exact, amb = certify(b, {ZERO: 1, W1: -1})
    assert exact and not amb
    assert out[0][ZERO] == 1 and out[1][W1] == 1

    b = {0: Counter({ZERO: 1}), 1: Counter({ZERO: 1})}
    out, exact, amb = certify(b, {})
    assert not exact and amb == [ZERO]

    with pytest.raises(EulerMismatch):
        certify({0: Counter()}, {W2: 1})


def test_intersect_tables_resolves_bounds():
    # the two bounds for one Ext computation cut each other down to truth
    route_a = cohomology_filtered(module(SHORT, [
        Weight(3, -1), Weight(1, 0), Weight(1, 0), Weight(4, -2),
        Weight(2, -1), Weight(1, -1)]))
    assert not route_a.exact
    euler = route_a.euler_dict()
    route_b = CohomologyTable.build(
        {0: Counter({RHO: 1, Weight(2, 0): 1, W1: 1}),
         1: Counter({RHO: 1, Weight(2, 0): 1})},
        False, euler)
    out = intersect_tables(route_a, route_b)
    assert out.exact
    assert out.entries(0) == (W1,) and not out.entries(1)

    # two routes whose intersection is empty certify vanishing
    t1 = CohomologyTable.build(
        {0: Counter({ZERO: 1}), 1: Counter({ZERO: 1})}, False, {})
    t2 = CohomologyTable.build(
        {0: Counter({W1: 1}), 1: Counter({W1: 1})}, False, {})
    out = intersect_tables(t1, t2)
    assert out.exact and out.is_zero()


def test_intersect_tables_exact_passthrough_and_euler_guard():
    t = cohomology_filtered(module(SHORT, [ZERO]))
    bound = CohomologyTable.build(
        {0: Counter({ZERO: 2}), 1: Counter({W1: 1})}, False, t.euler_dict())
    assert intersect_tables(t, bound) == t
    other = cohomology_filtered(module(SHORT, [Weight(2, 0)]))
    with pytest.raises(EulerMismatch):
        intersect_tables(t, other)


def test_char_p_caveat_flag():
    assert bott_line(Weight(4, -3), 11).caveat  # degree two
    assert not bott_line(Weight(3, -2), 11).caveat
    assert not bott_line(W1, 11).caveat


def test_linkage_class_type():
    from g2bwb.cohomology import LinkageClass
    c = LinkageClass.of(ZERO, 11)
    assert c.representative == RHO
    for w in weyl.ALL_ELEMENTS:
        assert c.contains(weyl.dot(w, ZERO))
    assert not c.contains(W2)
    assert LinkageClass.of(Weight(3, -2), 11) == c
