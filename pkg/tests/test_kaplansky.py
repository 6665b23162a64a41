import random
from fractions import Fraction

import pytest

from superform.scalars import PolyScalar, Sigma
from superform.superalg import vec_is_zero, vec_sub
from superform.d21.kaplansky import (
    CARTAN_INDICES,
    EPS_ORDER,
    kaplansky_build,
    odd_name,
)

x1, x2, x3 = PolyScalar.gen(1), PolyScalar.gen(2), PolyScalar.gen(3)
HALF = Fraction(1, 2)


def by_names(alg, a, b):
    return alg.bracket_basis(alg.index_of(a), alg.index_of(b))


def as_named(alg, vec):
    return {alg.basis[k].name: c for k, c in vec.items() if c}


# the complete odd-odd bracket table of the generic algebra, keyed by
# unordered sign-pattern pairs; every pair not listed must vanish
ODD_ODD_EXPECTED = {
    ("v_+++", "v_+--"): {"e1": -x1},
    ("v_+++", "v_-+-"): {"e2": -x2},
    ("v_+++", "v_--+"): {"e3": -x3},
    ("v_++-", "v_+-+"): {"e1": x1},
    ("v_++-", "v_-++"): {"e2": x2},
    ("v_+-+", "v_-++"): {"e3": x3},
    ("v_+++", "v_---"): {"h1": HALF * x1, "h2": HALF * x2, "h3": HALF * x3},
    ("v_++-", "v_--+"): {"h1": -HALF * x1, "h2": -HALF * x2, "h3": HALF * x3},
    ("v_+-+", "v_-+-"): {"h1": -HALF * x1, "h2": HALF * x2, "h3": -HALF * x3},
    ("v_-++", "v_+--"): {"h1": HALF * x1, "h2": -HALF * x2, "h3": -HALF * x3},
    ("v_-++", "v_---"): {"f1": x1},
    ("v_+-+", "v_---"): {"f2": x2},
    ("v_++-", "v_---"): {"f3": x3},
    ("v_-+-", "v_--+"): {"f1": -x1},
    ("v_+--", "v_--+"): {"f2": -x2},
    ("v_+--", "v_-+-"): {"f3": -x3},
}


class TestEvenPart:
    def test_three_sl2_blocks(self):
        g = kaplansky_build()
        for i in (1, 2, 3):
            assert as_named(g, by_names(g, f"h{i}", f"e{i}")) == {f"e{i}": 2}
            assert as_named(g, by_names(g, f"h{i}", f"f{i}")) == {f"f{i}": -2}
            assert as_named(g, by_names(g, f"e{i}", f"f{i}")) == {f"h{i}": 1}

    def test_blocks_commute(self):
        g = kaplansky_build()
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                if i == j:
                    continue
                for a in ("e", "h", "f"):
                    for b in ("e", "h", "f"):
                        assert not by_names(g, f"{a}{i}", f"{b}{j}")


class TestEvenOdd:
    def test_cartan_weights(self):
        g = kaplansky_build()
        for eps in EPS_ORDER:
            v = odd_name(eps)
            for i in (1, 2, 3):
                assert as_named(g, by_names(g, f"h{i}", v)) == {v: eps[i - 1]}

    def test_raising_lowering(self):
        g = kaplansky_build()
        for eps in EPS_ORDER:
            v = odd_name(eps)
            for i in (1, 2, 3):
                flipped = list(eps)
                flipped[i - 1] = -flipped[i - 1]
                w = odd_name(tuple(flipped))
                if eps[i - 1] == -1:
                    assert as_named(g, by_names(g, f"e{i}", v)) == {w: 1}
                    assert not by_names(g, f"f{i}", v)
                else:
                    assert as_named(g, by_names(g, f"f{i}", v)) == {w: 1}
                    assert not by_names(g, f"e{i}", v)


class TestOddOdd:
    def test_complete_table(self):
        g = kaplansky_build()
        names = [odd_name(eps) for eps in EPS_ORDER]
        for a, va in enumerate(names):
            for vb in names[a:]:
                expected = ODD_ODD_EXPECTED.get((va, vb), ODD_ODD_EXPECTED.get((vb, va), {}))
                got = as_named(g, by_names(g, va, vb))
                assert got == expected, f"[{va},{vb}]"

    def test_symmetric(self):
        g = kaplansky_build()
        names = [odd_name(eps) for eps in EPS_ORDER]
        for va in names:
            for vb in names:
                i, j = g.index_of(va), g.index_of(vb)
                assert g.bracket_basis(i, j) == g.bracket_basis(j, i)


class TestJacobi:
    def test_symbolic_on_plane(self):
        assert kaplansky_build().check_super_jacobi().ok

    def test_holds_iff_sum_zero(self):
        rng = random.Random(42)
        for _ in range(6):
            vals = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(2)]
            on = Sigma(vals[0], vals[1], -vals[0] - vals[1])
            assert kaplansky_build(on).check_super_jacobi().ok
        for bad in (Sigma(1, 1, -1), Sigma(0, 0, 1), Sigma(2, 2, 2)):
            rep = kaplansky_build(bad).check_super_jacobi()
            assert not rep.ok
            assert rep.failure is not None and rep.defect


class TestSpecialization:
    def test_build_commutes_with_specialize(self):
        for s in (Sigma(1, 1, -2), Sigma(0, 1, -1), Sigma(2, 3, -5)):
            direct = kaplansky_build(s)
            via = kaplansky_build().specialize(s)
            assert direct.table == via.table
            assert [b.parity for b in direct.basis] == [b.parity for b in via.basis]


class TestStructure:
    def test_simple_at_generic(self):
        for s in (Sigma(1, 1, -2), Sigma(2, 3, -5)):
            ok, witness = kaplansky_build(s).is_simple(list(CARTAN_INDICES))
            assert ok and witness is None

    def test_not_simple_at_singular(self):
        g = kaplansky_build(Sigma(0, 1, -1))
        ok, witness = g.is_simple(list(CARTAN_INDICES))
        assert not ok
        assert 0 < witness.dim < g.dim

    def test_cartan_names(self):
        g = kaplansky_build()
        assert [g.basis[i].name for i in CARTAN_INDICES] == ["h1", "h2", "h3"]
