import random
from fractions import Fraction

import pytest

from superform.scalars import PolyScalar, Sigma

x1 = PolyScalar.gen(1)
x2 = PolyScalar.gen(2)
x3 = PolyScalar.gen(3)


def random_poly(rng, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        k = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        terms[k] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return PolyScalar(terms)


def random_sigma(rng):
    return Sigma(
        Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
        Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
        Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
    )


class TestSigma:
    def test_parse_and_fields(self):
        s = Sigma.parse("1/2, -3, 5/2")
        assert (s.s1, s.s2, s.s3) == (Fraction(1, 2), Fraction(-3), Fraction(5, 2))
        assert s[1] == Fraction(1, 2) and s[3] == Fraction(5, 2)

    def test_plane_membership(self):
        assert Sigma(1, 1, -2).in_V
        assert Sigma(1, 1, -2).in_V_times
        assert Sigma(0, 1, -1).in_V
        assert not Sigma(0, 1, -1).in_V_times
        assert not Sigma(1, 1, -1).in_V
        assert Sigma(0, 1, -1).zero_positions() == (1,)
        assert Sigma(0, 0, 0).zero_positions() == (1, 2, 3)

    def test_integrality(self):
        assert Sigma(2, 3, -5).is_integral
        assert not Sigma(Fraction(1, 2), 0, Fraction(-1, 2)).is_integral

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            Sigma.parse("1,2")
        with pytest.raises(ValueError):
            Sigma.parse("1,2,z")

    def test_immutable(self):
        s = Sigma(1, 1, -2)
        with pytest.raises(AttributeError):
            s.s1 = 0

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Sigma(0.5, 1, -1.5)


class TestPolyScalarRing:
    def test_defining_relation(self):
        assert (x1 + x2 + x3).is_zero()

    def test_x3_storage(self):
        assert x3 == -(x1 + x2)

    def test_canonical_no_zero_terms(self):
        p = x1 - x1
        assert p.terms == {}
        q = PolyScalar({(2, 0): Fraction(0), (1, 1): Fraction(3)})
        assert (2, 0) not in q.terms

    def test_product_squared_matches_expansion(self):
        # (x1*x2*x3)^2 with x3 = -x1-x2, expanded by hand:
        prod = x1 * x2 * x3
        expected = PolyScalar(
            {
                (4, 2): Fraction(1),
                (3, 3): Fraction(2),
                (2, 4): Fraction(1),
            }
        )
        assert prod * prod == expected
        assert prod**2 == expected

    def test_pow_matches_repeated_mul(self):
        p = x1 - 2 * x2
        q = PolyScalar.one()
        for _ in range(5):
            q = q * p
        assert p**5 == q

    def test_int_coercion(self):
        assert 2 * x1 == x1 + x1
        assert (x1 + 1) - 1 == x1
        assert 1 - x1 == -(x1 - 1)

    def test_equality_with_rationals(self):
        assert PolyScalar.const(Fraction(3, 2)) == Fraction(3, 2)
        assert PolyScalar.zero() == 0
        assert x1 != 0

    def test_hashable(self):
        d = {x1 * x2: "a", x2 * x1: "b"}
        assert len(d) == 1


class TestSpecialize:
    def test_examples(self):
        s = Sigma(1, 1, -2)
        assert (x1 * x2 * x3).specialize(s) == Fraction(-2)
        assert x3.specialize(Sigma(2, 3, -5)) == Fraction(-5)

    def test_is_ring_homomorphism(self):
        rng = random.Random(20260816)
        sigmas = [random_sigma(rng) for _ in range(20)]
        for _ in range(200):
            p = random_poly(rng)
            q = random_poly(rng)
            for s in sigmas:
                assert (p + q).specialize(s) == p.specialize(s) + q.specialize(s)
                assert (p * q).specialize(s) == p.specialize(s) * q.specialize(s)
        assert PolyScalar.one().specialize(sigmas[0]) == 1

    def test_specialize_off_plane_uses_first_two_coords(self):
        # off the plane the map just substitutes x1, x2
        s = Sigma(1, 1, -1)
        assert x3.specialize(s) == -2


class TestSerialization:
    def test_str_format(self):
        p = Fraction(3, 2) * x1**2 * x2 - x2
        assert str(p) == "3/2*x1^2*x2 - 1*x2"
        assert str(PolyScalar.zero()) == "0"
        assert str(PolyScalar.const(Fraction(-5, 3))) == "-5/3"

    def test_parse_round_trip(self):
        rng = random.Random(7)
        for _ in range(100):
            p = random_poly(rng)
            assert PolyScalar.parse(str(p)) == p

    def test_parse_accepts_x3(self):
        assert PolyScalar.parse("x1 + x2 + x3") == PolyScalar.zero()
        assert PolyScalar.parse("2*x3^2") == 2 * x3 * x3
        assert PolyScalar.parse("x1*x2*x3") == x1 * x2 * x3

    def test_parse_plain_forms(self):
        assert PolyScalar.parse("-x1") == -x1
        assert PolyScalar.parse("5") == PolyScalar.const(5)
        assert PolyScalar.parse("3/2") == PolyScalar.const(Fraction(3, 2))
        assert PolyScalar.parse("x1^2") == x1 * x1
        assert PolyScalar.parse("0") == PolyScalar.zero()

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            PolyScalar.parse("x4")
        with pytest.raises(ValueError):
            PolyScalar.parse("2**x1")

    def test_immutable(self):
        with pytest.raises(AttributeError):
            x1.terms = {}
