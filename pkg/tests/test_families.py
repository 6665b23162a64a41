from fractions import Fraction

import pytest

from superform.scalars import PolyScalar, Sigma
from superform.superalg import LinearMap
from superform.d21.families import (
    BASIS_SPEC,
    CARTAN_INDICES,
    FAMILY_KEYS,
    contract,
    family_build,
    tau_of,
    third,
)
from superform.d21.kaplansky import FAMILY_TO_KAPLANSKY_NAMES, kaplansky_build

x1, x2, x3 = PolyScalar.gen(1), PolyScalar.gen(2), PolyScalar.gen(3)
XS = {1: x1, 2: x2, 3: x3}
HALF = Fraction(1, 2)


def by_names(alg, a, b):
    return {
        alg.basis[k].name: c
        for k, c in alg.bracket_basis(alg.index_of(a), alg.index_of(b)).items()
    }


def oracle_in_family_order():
    oracle = kaplansky_build()
    perm = [0] * oracle.dim
    family_names = [nm for nm, _ in BASIS_SPEC]
    for pos, nm in enumerate(family_names):
        perm[oracle.index_of(FAMILY_TO_KAPLANSKY_NAMES[nm])] = pos
    return oracle.reindex(perm, names=family_names)


class TestJacobiSymbolic:
    @pytest.mark.parametrize("kind", FAMILY_KEYS)
    def test_all_families(self, kind):
        assert family_build(kind).check_super_jacobi().ok


class TestGpMatchesOracle:
    def test_exact_table_equality_under_renaming(self):
        gp = family_build("gp")
        renamed = oracle_in_family_order()
        assert [b.name for b in renamed.basis] == [b.name for b in gp.basis]
        assert [b.parity for b in renamed.basis] == [b.parity for b in gp.basis]
        assert renamed.table == gp.table


class TestOracleEmbeddings:
    """Bracket-preserving maps into the formula-built oracle validate the
    transcribed tables of the other four families."""

    @staticmethod
    def embedding_assignment(kind):
        tau = tau_of(None)
        assign = {}
        for i in (1, 2, 3):
            h_c = XS[i] if kind in ("g", "ghat") else 1
            x_c = 1 if kind in ("gp", "ghatp") else XS[i]
            assign[f"H_2e{i}"] = {f"h{i}": h_c}
            assign[f"X_2e{i}"] = {f"e{i}": x_c}
            assign[f"X_-2e{i}"] = {f"f{i}": x_c}
        odd_c = tau if kind in ("ghat", "ghatp") else 1
        for nm in ("X_b1", "X_b2", "X_b3", "X_th", "X_-b1", "X_-b2", "X_-b3", "X_-th"):
            assign[nm] = {FAMILY_TO_KAPLANSKY_NAMES[nm]: odd_c}
        return assign

    @pytest.mark.parametrize("kind", ["g", "gpp", "ghat", "ghatp"])
    def test_embedding_preserves_brackets(self, kind):
        alg = family_build(kind)
        oracle = kaplansky_build()
        emb = LinearMap.from_named(alg, oracle, self.embedding_assignment(kind))
        assert emb.verify_morphism().ok


class TestPrintedRows:
    def test_g_rows(self):
        g = family_build("g")
        assert by_names(g, "H_2e1", "X_b1") == {"X_b1": -x1}
        assert by_names(g, "H_2e1", "X_b2") == {"X_b2": x1}
        assert by_names(g, "H_2e1", "X_th") == {"X_th": x1}
        assert by_names(g, "H_2e2", "X_2e2") == {"X_2e2": 2 * x2}
        assert by_names(g, "X_2e1", "X_-2e1") == {"H_2e1": x1}
        assert by_names(g, "X_2e1", "X_-2e2") == {}
        assert by_names(g, "X_b1", "X_b2") == {"X_2e3": PolyScalar.one()}
        assert by_names(g, "X_-b1", "X_-b3") == {"X_-2e2": -PolyScalar.one()}
        assert by_names(g, "X_b1", "X_-b1") == {
            "H_2e1": HALF, "H_2e2": -HALF, "H_2e3": -HALF
        }
        assert by_names(g, "X_th", "X_-th") == {
            "H_2e1": HALF, "H_2e2": HALF, "H_2e3": HALF
        }
        assert by_names(g, "X_b2", "X_-th") == {"X_-2e2": PolyScalar.one()}
        assert by_names(g, "X_-b2", "X_th") == {"X_2e2": -PolyScalar.one()}
        assert by_names(g, "X_2e1", "X_-b2") == {"X_b3": x1}
        assert by_names(g, "X_-2e3", "X_b1") == {"X_-b2": x3}
        assert by_names(g, "X_2e2", "X_-th") == {"X_-b2": x2}
        assert by_names(g, "X_b1", "X_th") == {}

    def test_gp_rows(self):
        gp = family_build("gp")
        one = PolyScalar.one()
        assert by_names(gp, "H_2e1", "X_b1") == {"X_b1": -one}
        assert by_names(gp, "H_2e1", "X_2e1") == {"X_2e1": 2 * one}
        assert by_names(gp, "X_2e1", "X_-2e1") == {"H_2e1": one}
        assert by_names(gp, "X_b1", "X_b2") == {"X_2e3": x3}
        assert by_names(gp, "X_b2", "X_b3") == {"X_2e1": x1}
        assert by_names(gp, "X_-b1", "X_-b2") == {"X_-2e3": -x3}
        assert by_names(gp, "X_b1", "X_-b1") == {
            "H_2e1": HALF * x1, "H_2e2": -HALF * x2, "H_2e3": -HALF * x3
        }
        assert by_names(gp, "X_th", "X_-th") == {
            "H_2e1": HALF * x1, "H_2e2": HALF * x2, "H_2e3": HALF * x3
        }
        assert by_names(gp, "X_b2", "X_-th") == {"X_-2e2": x2}
        assert by_names(gp, "X_-b2", "X_th") == {"X_2e2": -x2}
        assert by_names(gp, "X_2e1", "X_-b2") == {"X_b3": one}
        assert by_names(gp, "X_2e2", "X_-th") == {"X_-b2": one}

    def test_gpp_rows(self):
        gpp = family_build("gpp")
        one = PolyScalar.one()
        assert by_names(gpp, "H_2e1", "X_2e1") == {"X_2e1": 2 * one}
        assert by_names(gpp, "X_2e1", "X_-2e1") == {"H_2e1": x1 * x1}
        assert by_names(gpp, "H_2e1", "X_b1") == {"X_b1": -one}
        assert by_names(gpp, "X_2e1", "X_b1") == {"X_th": x1}
        assert by_names(gpp, "X_2e1", "X_-b2") == {"X_b3": x1}
        assert by_names(gpp, "X_b1", "X_b2") == {"X_2e3": one}
        assert by_names(gpp, "X_b1", "X_-th") == {"X_-2e1": one}
        assert by_names(gpp, "X_b1", "X_-b1") == {
            "H_2e1": HALF * x1, "H_2e2": -HALF * x2, "H_2e3": -HALF * x3
        }

    def test_hatted_rows(self):
        tau = tau_of(None)
        ghat = family_build("ghat")
        assert by_names(ghat, "X_b1", "X_b2") == {"X_2e3": tau * tau}
        assert by_names(ghat, "H_2e1", "X_b1") == {"X_b1": -x1}
        ghatp = family_build("ghatp")
        assert by_names(ghatp, "X_b1", "X_b2") == {"X_2e3": tau * tau * x3}
        assert by_names(ghatp, "X_2e1", "X_b1") == {"X_th": PolyScalar.one()}
        assert by_names(ghatp, "X_th", "X_-th") == {
            "H_2e1": HALF * tau * tau * x1,
            "H_2e2": HALF * tau * tau * x2,
            "H_2e3": HALF * tau * tau * x3,
        }


class TestSpecialization:
    @pytest.mark.parametrize("kind", FAMILY_KEYS)
    def test_build_commutes_with_specialize(self, kind):
        for s in (Sigma(1, 1, -2), Sigma(0, 1, -1), Sigma(0, 0, 0)):
            assert family_build(kind, s).table == family_build(kind).specialize(s).table

    def test_contraction_kills_odd_brackets_at_singular(self):
        for s in (Sigma(0, 1, -1), Sigma(0, 0, 0)):
            for kind in ("ghat", "ghatp"):
                alg = family_build(kind, s)
                for i in range(9, 17):
                    for j in range(i, 17):
                        assert not alg.bracket_basis(i, j)

    def test_contract_matches_family_build(self):
        s = Sigma(1, 1, -2)
        assert contract(family_build("g", s)).table == family_build("ghat", s).table
        assert contract(family_build("gp", s)).table == family_build("ghatp", s).table

    def test_tau(self):
        assert tau_of(Sigma(1, 1, -2)) == -2
        assert tau_of(None) == x1 * x2 * x3


class TestStructure:
    @pytest.mark.parametrize("kind", FAMILY_KEYS)
    def test_simple_at_generic(self, kind):
        ok, witness = family_build(kind, Sigma(1, 1, -2)).is_simple(list(CARTAN_INDICES))
        assert ok and witness is None

    def test_g_singular_not_simple(self):
        ok, witness = family_build("g", Sigma(0, 1, -1)).is_simple(list(CARTAN_INDICES))
        assert not ok and witness.dim > 0

    def test_gp_all_odd_brackets_vanish_at_zero(self):
        gp0 = family_build("gp", Sigma(0, 0, 0))
        for i in range(9, 17):
            for j in range(i, 17):
                assert not gp0.bracket_basis(i, j)

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            family_build("bogus")

    def test_third(self):
        assert third(1, 2) == 3 and third(3, 1) == 2 and third(2, 3) == 1
