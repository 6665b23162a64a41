import random
from fractions import Fraction

import pytest

from superform.weil import WeilAlgebra, WeilElement


def random_element(alg, rng, max_terms=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        m = rng.randrange(alg.dim)
        terms[m] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return alg.element(terms)


def random_parity(alg, rng, parity, max_terms=4):
    masks = [m for m in range(alg.dim) if m.bit_count() & 1 == parity]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(masks)] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return alg.element(terms)


class TestBasics:
    def test_dim(self):
        assert WeilAlgebra(0).dim == 1
        assert WeilAlgebra(4).dim == 16

    def test_generators_anticommute(self):
        alg = WeilAlgebra(4)
        for i in range(1, 5):
            gi = alg.gen(i)
            assert (gi * gi).is_zero()
            for j in range(1, 5):
                if i != j:
                    gj = alg.gen(j)
                    assert gi * gj == -(gj * gi)

    def test_sign_examples(self):
        alg = WeilAlgebra(3)
        g1, g2, g3 = alg.gens()
        assert g1 * g2 == alg.monomial([1, 2])
        assert g2 * g1 == alg.monomial([1, 2], -1)
        assert (g1 * g3) * g2 == alg.monomial([1, 2, 3], -1)
        assert g1 * g2 * g3 == alg.monomial([1, 2, 3])

    def test_associative_random(self):
        alg = WeilAlgebra(4)
        rng = random.Random(101)
        for _ in range(60):
            a = random_element(alg, rng)
            b = random_element(alg, rng)
            c = random_element(alg, rng)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_scalar_and_int_ops(self):
        alg = WeilAlgebra(2)
        x = alg.gen(1)
        assert 2 * x == x + x
        assert x * Fraction(1, 2) + x * Fraction(1, 2) == x
        assert (1 + x) - 1 == x

    def test_mixed_algebras_rejected(self):
        with pytest.raises(ValueError):
            WeilAlgebra(2).gen(1) * WeilAlgebra(3).gen(1)

    def test_parity(self):
        alg = WeilAlgebra(3)
        assert alg.one().parity() == 0
        assert alg.gen(1).parity() == 1
        assert (alg.gen(1) * alg.gen(2)).parity() == 0
        assert (alg.one() + alg.gen(1)).parity() is None
        assert alg.zero().parity() == 0

    def test_odd_elements_square_to_zero(self):
        alg = WeilAlgebra(4)
        rng = random.Random(55)
        for _ in range(40):
            eta = random_parity(alg, rng, parity=1)
            assert (eta * eta).is_zero()


class TestBodyAndUnits:
    def test_body_nilpart_split(self):
        alg = WeilAlgebra(3)
        a = 5 + 2 * alg.monomial([1, 2]) - alg.gen(3)
        assert a.body == 5
        assert a.nilpart() + alg.const(5) == a
        assert a.nilpart().body == 0

    def test_invert_simple(self):
        alg = WeilAlgebra(2)
        u = 1 + alg.monomial([1, 2])
        assert u.invert_unit() == 1 - alg.monomial([1, 2])

    def test_invert_random_units(self):
        alg = WeilAlgebra(4)
        rng = random.Random(17)
        for _ in range(40):
            u = random_element(alg, rng) + alg.const(rng.randint(1, 7))
            if u.body == 0:
                continue
            assert u * u.invert_unit() == 1
            assert u.invert_unit() * u == 1

    def test_invert_rejects_body_zero(self):
        alg = WeilAlgebra(2)
        with pytest.raises(ValueError):
            alg.gen(1).invert_unit()

    def test_exp_order_two(self):
        alg = WeilAlgebra(2)
        n = alg.monomial([1, 2], Fraction(3, 2))
        assert n.exp_nilpotent() == 1 + n

    def test_exp_additive_on_commuting_even(self):
        alg = WeilAlgebra(4)
        a = alg.monomial([1, 2], Fraction(2, 3))
        b = alg.monomial([3, 4], -2)
        assert (a + b).exp_nilpotent() == a.exp_nilpotent() * b.exp_nilpotent()

    def test_exp_inverse(self):
        alg = WeilAlgebra(4)
        rng = random.Random(23)
        for _ in range(20):
            n = random_parity(alg, rng, parity=0).nilpart()
            assert n.exp_nilpotent() * (-n).exp_nilpotent() == 1

    def test_exp_rejects_nonzero_body(self):
        alg = WeilAlgebra(2)
        with pytest.raises(ValueError):
            alg.one().exp_nilpotent()

    def test_min_degree(self):
        alg = WeilAlgebra(3)
        assert alg.zero().min_degree() == 0
        assert (alg.gen(2) + alg.monomial([1, 2, 3])).min_degree() == 1
        assert alg.monomial([1, 3]).min_degree() == 2


class TestSerialization:
    def test_str_example(self):
        alg = WeilAlgebra(4)
        a = 1 + 2 * alg.monomial([1, 2]) - Fraction(1, 3) * alg.monomial([1, 2, 3, 4])
        assert str(a) == "q=4: 1 + 2*x[1,2] - 1/3*x[1,2,3,4]"
        assert str(alg.zero()) == "q=4: 0"

    def test_round_trip(self):
        rng = random.Random(3)
        for q in (0, 1, 3, 4):
            alg = WeilAlgebra(q)
            for _ in range(40):
                a = random_element(alg, rng)
                b = WeilAlgebra.parse(str(a))
                assert b == a and b.alg.q == q

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            WeilAlgebra.parse("1 + x[1]")
        with pytest.raises(ValueError):
            WeilAlgebra.parse("q=2: y[1]")


class TestRestriction:
    def test_kills_high_generators(self):
        big = WeilAlgebra(4)
        small = WeilAlgebra(3)
        a = 2 + big.monomial([1, 3]) + 5 * big.monomial([1, 4])
        r = big.restrict(a, small)
        assert r == 2 + small.monomial([1, 3])

    def test_is_multiplicative(self):
        big = WeilAlgebra(4)
        small = WeilAlgebra(2)
        rng = random.Random(9)
        for _ in range(40):
            a = random_element(big, rng)
            b = random_element(big, rng)
            assert big.restrict(a * b, small) == big.restrict(a, small) * big.restrict(b, small)
            assert big.restrict(a + b, small) == big.restrict(a, small) + big.restrict(b, small)

    def test_rejects_growth(self):
        with pytest.raises(ValueError):
            WeilAlgebra(2).restrict(WeilAlgebra(2).one(), WeilAlgebra(3))
