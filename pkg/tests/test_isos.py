"""Permutation/scale twists and base changes between the five families."""

import random
from fractions import Fraction

import pytest

from superform.scalars import Sigma
from superform.d21.families import FAMILY_KEYS, family_build
from superform.d21.isos import (
    ALL_PERMS,
    basis_change,
    perm_compose,
    perm_inverse,
    s3_scale_iso,
    sigma_image,
)

GENERIC = Sigma.parse("1,1,-2")
SCALES = (Fraction(1), Fraction(2), Fraction(-1, 3))


def test_perm_inverse_and_compose():
    for p in ALL_PERMS:
        assert perm_compose(p, perm_inverse(p)) == (1, 2, 3)
        assert perm_compose(perm_inverse(p), p) == (1, 2, 3)
    assert perm_compose((2, 3, 1), (2, 1, 3)) == (3, 2, 1)


def test_sigma_image_example():
    out = sigma_image(GENERIC, (2, 3, 1), 2)
    assert out == Sigma(-4, 2, 2)


def test_sigma_image_stays_on_plane():
    rng = random.Random(20260816)
    for _ in range(20):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        sig = Sigma(a, b, -a - b)
        perm = ALL_PERMS[rng.randrange(6)]
        c = Fraction(rng.randint(1, 7), rng.randint(1, 7))
        assert sigma_image(sig, perm, c).in_V


def test_identity_twist_is_identity():
    m = s3_scale_iso("gp", GENERIC, (1, 2, 3), 1)
    src = m.source
    for i in range(src.dim):
        assert m.images[i] == {i: Fraction(1)}


def test_all_twists_on_gp_are_isomorphisms():
    for perm in ALL_PERMS:
        for c in SCALES:
            m = s3_scale_iso("gp", GENERIC, perm, c)
            assert m.target.sigma == sigma_image(GENERIC, perm, c)
            rep = m.verify_morphism(expect_injective=True, expect_surjective=True)
            assert rep.ok, (perm, c, rep.bracket_failures)


@pytest.mark.parametrize("kind", [k for k in FAMILY_KEYS if k != "gp"])
def test_twists_on_other_families(kind):
    for perm in ((2, 3, 1), (2, 1, 3)):
        for c in (Fraction(2), Fraction(-1, 3)):
            m = s3_scale_iso(kind, GENERIC, perm, c)
            rep = m.verify_morphism(expect_injective=True, expect_surjective=True)
            assert rep.ok, (kind, perm, c, rep.bracket_failures)


def test_twist_composition_law():
    rng = random.Random(20260816)
    for _ in range(6):
        p1 = ALL_PERMS[rng.randrange(6)]
        p2 = ALL_PERMS[rng.randrange(6)]
        c1 = Fraction(rng.choice([1, 2, 3, -1]), rng.choice([1, 2]))
        c2 = Fraction(rng.choice([1, 2, -3]), rng.choice([1, 3]))
        m1 = s3_scale_iso("gp", GENERIC, p1, c1)
        middle = sigma_image(GENERIC, p1, c1)
        m2 = s3_scale_iso("gp", middle, p2, c2)
        direct = s3_scale_iso("gp", GENERIC, perm_compose(p2, p1), c2 * c1)
        composed = m1.then(m2)
        assert sigma_image(middle, p2, c2) == direct.target.sigma
        for i in range(direct.source.dim):
            assert composed.images[i] == direct.images[i], (p1, c1, p2, c2, i)


def test_gp_twist_defined_at_singular_parameter():
    sig = Sigma.parse("0,2,-2")
    m = s3_scale_iso("gp", sig, (1, 2, 3), Fraction(1, 2))
    assert m.target.sigma == Sigma.parse("0,1,-1")
    assert m.verify_morphism(expect_injective=True, expect_surjective=True).ok
    moved = s3_scale_iso("gp", Sigma.parse("1,0,-1"), (2, 1, 3), 1)
    assert moved.target.sigma == Sigma.parse("0,1,-1")
    assert moved.verify_morphism(expect_injective=True, expect_surjective=True).ok


def test_nongp_twist_requires_invertible_parameter():
    with pytest.raises(ValueError):
        s3_scale_iso("g", Sigma.parse("0,1,-1"), (1, 2, 3), 2)


def test_zero_scale_rejected():
    with pytest.raises(ValueError):
        s3_scale_iso("gp", GENERIC, (1, 2, 3), 0)


def test_basis_change_all_pairs_generic():
    for a in FAMILY_KEYS:
        for b in FAMILY_KEYS:
            m = basis_change(a, b, GENERIC)
            assert m.source.name.split("@")[0] == a
            assert m.target.name.split("@")[0] == b
            rep = m.verify_morphism(expect_injective=True, expect_surjective=True)
            assert rep.ok, (a, b, rep.bracket_failures, rep.parity_failures)


def test_basis_change_round_trips():
    for a in FAMILY_KEYS:
        for b in FAMILY_KEYS:
            fwd = basis_change(a, b, GENERIC)
            back = basis_change(b, a, GENERIC)
            round_trip = fwd.then(back)
            for i in range(round_trip.source.dim):
                img = round_trip.images[i]
                assert list(img) == [i]
                assert img[i] == 1, (a, b, i, img)


def test_basis_change_identity_at_singular_parameter():
    m = basis_change("gp", "gp", Sigma.parse("0,1,-1"))
    assert m.verify_morphism().ok


def test_basis_change_singular_parameter_rejected():
    for a, b in (("g", "gp"), ("gp", "gpp"), ("ghat", "g")):
        with pytest.raises(ValueError):
            basis_change(a, b, Sigma.parse("0,1,-1"))


def test_basis_change_transports_brackets_by_hand():
    # in gpp the raising/lowering pair closes on s_i^2 times the Cartan vector;
    # the base change to gp rescales that to the parameter-free normalization
    sig = Sigma.parse("2,3,-5")
    m = basis_change("gpp", "gp", sig)
    gpp = m.source
    gp = m.target
    i = gpp.index_of("X_2e1")
    j = gpp.index_of("X_-2e1")
    lhs = m.apply(gpp.bracket_basis(i, j))
    rhs = gp.bracket(m.images[i], m.images[j])
    assert lhs == rhs
    assert rhs == {gp.index_of("H_2e1"): Fraction(4)}
