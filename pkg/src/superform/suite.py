"""Aggregated verification battery.

Thirteen independent criteria cover the whole library: symbolic Lie-bracket
identities, the parameter-plane characterization, oracle agreement between the
formula-driven and table-driven constructions, simplicity at generic
parameters, the four degeneration batteries, contraction isomorphisms, the
Cartan-matrix relation suite, the permutation/scale symmetry action, the group
normal-form engine with its relation catalog, group-level degeneration checks,
and byte-level determinism of the emitted reports.

Each criterion gets its own derived seed (``base_seed XOR index``) so the
optional thread pool cannot change any result; the report serializes with
sorted keys and no environment-dependent data, making output byte-identical
for a fixed seed.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .scalars import Sigma
from .superalg import LinearMap
from .d21.families import BASIS_SPEC, FAMILY_KEYS, family_build
from .d21.isos import ALL_PERMS, perm_compose, s3_scale_iso, sigma_image
from .d21.kac import kac_relation_report
from .d21.kaplansky import FAMILY_TO_KAPLANSKY_NAMES, kaplansky_build
from .degen import analyze
from .sgrp import verify_engine, verify_group_structure, verify_presentation

GENERIC_TRIPLES = ("1,1,-2", "2,3,-5", "1,-3,2")
ONE_ZERO = "0,1,-1"
ZERO = "0,0,0"
SCALES = (Fraction(1), Fraction(2), Fraction(-1, 3))


@dataclass
class CriterionResult:
    index: int
    name: str
    ok: bool
    details: Dict

    def to_json_dict(self) -> Dict:
        return {
            "index": self.index,
            "name": self.name,
            "ok": self.ok,
            "details": self.details,
        }


@dataclass
class SuiteReport:
    seed: int
    criteria: List[CriterionResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.criteria)

    def to_json_dict(self) -> Dict:
        return {
            "seed": self.seed,
            "criteria": [c.to_json_dict() for c in self.criteria],
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


# --- criterion runners; each returns (ok, details) --------------------------


def _crit_jacobi(seed: int):
    per = {}
    for kind in FAMILY_KEYS:
        per[kind] = family_build(kind).check_super_jacobi().ok
    return all(per.values()), {"symbolic_jacobi": per}


def _crit_kaplansky_iff(seed: int):
    rng = random.Random(seed)

    def rand_frac():
        return Fraction(rng.randrange(-6, 7), rng.choice((1, 2, 3)))

    on_plane = []
    while len(on_plane) < 10:
        a, b = rand_frac(), rand_frac()
        on_plane.append(Sigma(a, b, -a - b))
    off_plane = []
    while len(off_plane) < 10:
        a, b, c = rand_frac(), rand_frac(), rand_frac()
        if a + b + c != 0:
            off_plane.append(Sigma(a, b, c))

    plane_results = []
    for s in on_plane:
        rep = kaplansky_build(s).check_super_jacobi()
        plane_results.append([str(s), rep.ok])
    off_results = []
    for s in off_plane:
        alg = kaplansky_build(s)
        rep = alg.check_super_jacobi()
        witness = None
        if not rep.ok and rep.failure is not None:
            witness = [alg.basis[t].name for t in rep.failure]
        off_results.append([str(s), (not rep.ok) and witness is not None, witness])
    ok = all(r[1] for r in plane_results) and all(r[1] for r in off_results)
    return ok, {
        "on_plane_jacobi_holds": plane_results,
        "off_plane_jacobi_fails_with_witness": off_results,
    }


def _crit_oracle_equivalence(seed: int):
    gp = family_build("gp")
    oracle = kaplansky_build()
    family_names = [nm for nm, _ in BASIS_SPEC]
    perm = [0] * oracle.dim
    for pos, nm in enumerate(family_names):
        perm[oracle.index_of(FAMILY_TO_KAPLANSKY_NAMES[nm])] = pos
    renamed = oracle.reindex(perm, names=family_names)
    checks = {
        "basis_names": [b.name for b in renamed.basis] == [b.name for b in gp.basis],
        "parities": [b.parity for b in renamed.basis] == [b.parity for b in gp.basis],
        "structure_table": renamed.table == gp.table,
    }
    return all(checks.values()), checks


def _crit_generic_simplicity(seed: int):
    cases = {}
    for s in GENERIC_TRIPLES:
        sig = Sigma.parse(s)
        for kind in FAMILY_KEYS:
            rep = analyze(kind, sig)
            cases[f"{kind}@{s}"] = (
                rep.regime == "generic"
                and rep.ok
                and all(rep.facts.get(f) for f in ("simple", "center_trivial", "derived_full"))
            )
    return all(cases.values()), {"cases": cases}


def _analyze_case(kind: str, s: str, regime: str, required: Tuple[str, ...]):
    rep = analyze(kind, Sigma.parse(s))
    ok = rep.regime == regime and rep.ok and all(rep.facts.get(f, False) for f in required)
    return ok, {
        "regime": rep.regime,
        "ok": rep.ok,
        "facts": dict(sorted(rep.facts.items())),
    }


def _crit_degeneration_g(seed: int):
    ok1, d1 = _analyze_case(
        "g", ONE_ZERO, "one_zero", ("central_block", "non_split", "quotient_iso_psl22")
    )
    ok2, d2 = _analyze_case(
        "g",
        ZERO,
        "all_zero",
        ("center_is_even", "derived_equals_center", "not_abelian", "quotient_odd_abelian"),
    )
    return ok1 and ok2, {f"g@{ONE_ZERO}": d1, f"g@{ZERO}": d2}


def _crit_degeneration_gp(seed: int):
    ok1, d1 = _analyze_case(
        "gp", ONE_ZERO, "one_zero",
        ("side_ideal", "side_ideal_iso_psl22", "complement_sl2", "split"),
    )
    ok2, d2 = _analyze_case(
        "gp", ZERO, "all_zero",
        ("even_sl2_cubed", "odd_abelian_ideal", "split", "odd_weights_cube"),
    )
    return ok1 and ok2, {f"gp@{ONE_ZERO}": d1, f"gp@{ZERO}": d2}


def _crit_degeneration_gpp(seed: int):
    ok1, d1 = _analyze_case(
        "gpp", ONE_ZERO, "one_zero",
        ("root_pair_abelian_ideal", "quotient_splits", "quotient_ideal_iso_psl22"),
    )
    ok2, d2 = _analyze_case(
        "gpp", ZERO, "all_zero",
        (
            "root_vectors_abelian_ideal",
            "quotient_torus_odd_split",
            "quotient_torus_acts",
            "theta_coroot_vanishes",
        ),
    )
    return ok1 and ok2, {f"gpp@{ONE_ZERO}": d1, f"gpp@{ZERO}": d2}


def _crit_contractions(seed: int):
    details = {}
    ok = True

    # generic parameters: contraction is isomorphic to its source by rescaling
    # the odd part by 1/(s1*s2*s3)
    for s in GENERIC_TRIPLES:
        sig = Sigma.parse(s)
        tau = sig[1] * sig[2] * sig[3]
        c = Fraction(1) / tau
        for base, hat in (("g", "ghat"), ("gp", "ghatp")):
            src = family_build(base, sig)
            tgt = family_build(hat, sig)
            assign = {
                b.name: {b.name: c if b.parity else Fraction(1)} for b in src.basis
            }
            m = LinearMap.from_named(src, tgt, assign)
            rep = m.verify_morphism(expect_injective=True, expect_surjective=True)
            details[f"{base}->{hat}@{s}"] = rep.ok
            ok = ok and rep.ok

    ok1, d1 = _analyze_case(
        "ghat", ONE_ZERO, "one_zero",
        ("central_block", "sl2_factors", "odd_abelian_ideal", "split", "odd_weights_doubled"),
    )
    ok2, d2 = _analyze_case("ghat", ZERO, "all_zero", ("abelian",))
    ghat0 = family_build("ghat", Sigma.parse(ZERO))
    flat = ghat0.superdim == (9, 8) and ghat0.derived_subalgebra().dim == 0
    ok3, d3 = _analyze_case(
        "ghatp", ONE_ZERO, "one_zero",
        ("even_sl2_cubed", "odd_abelian_ideal", "split", "odd_weights_cube"),
    )
    ok4, d4 = _analyze_case(
        "ghatp", ZERO, "all_zero",
        ("even_sl2_cubed", "odd_abelian_ideal", "split", "odd_weights_cube"),
    )
    details[f"ghat@{ONE_ZERO}"] = d1
    details[f"ghat@{ZERO}"] = d2
    details["ghat@0,0,0_flat_9|8"] = flat
    details[f"ghatp@{ONE_ZERO}"] = d3
    details[f"ghatp@{ZERO}"] = d4
    return ok and ok1 and ok2 and flat and ok3 and ok4, details


def _crit_kac_suite(seed: int):
    sym = kac_relation_report()
    deg = kac_relation_report(Sigma.parse("1,0,-1"))
    gen = kac_relation_report(Sigma.parse("1,1,-2"))
    checks = {
        "symbolic_ok": sym.ok,
        "degenerate_parameter_ok": deg.ok,
        "generic_parameter_ok": gen.ok,
        "quartic_vanishes_when_second_entry_zero": deg.quartic_is_zero,
        "quartic_nonzero_at_generic": not gen.quartic_is_zero,
    }
    return all(checks.values()), checks


def _crit_s3_scale(seed: int):
    sig = Sigma.parse("1,1,-2")
    details = {}
    ok = True
    for kind in FAMILY_KEYS:
        for perm in ALL_PERMS:
            for c in SCALES:
                m = s3_scale_iso(kind, sig, perm, c)
                rep = m.verify_morphism(expect_injective=True, expect_surjective=True)
                key = f"{kind}|perm={''.join(map(str, perm))}|c={c}"
                details[key] = rep.ok
                ok = ok and rep.ok

    rng = random.Random(seed)
    comp_ok = True
    for _ in range(4):
        p1 = ALL_PERMS[rng.randrange(6)]
        p2 = ALL_PERMS[rng.randrange(6)]
        c1 = Fraction(rng.choice((1, 2, 3, -1)), rng.choice((1, 2)))
        c2 = Fraction(rng.choice((1, 2, -3)), rng.choice((1, 3)))
        m1 = s3_scale_iso("g", sig, p1, c1)
        mid = sigma_image(sig, p1, c1)
        m2 = s3_scale_iso("g", mid, p2, c2)
        direct = s3_scale_iso("g", sig, perm_compose(p2, p1), c2 * c1)
        composed = m1.then(m2)
        if composed.images != direct.images:
            comp_ok = False
    details["composition_law"] = comp_ok
    return ok and comp_ok, details


def _crit_group_engine(seed: int):
    details = {}
    ok = True
    idx = 0
    for kind in FAMILY_KEYS:
        for s in ("1,1,-2", ONE_ZERO):
            sig = Sigma.parse(s)
            pres = verify_presentation(kind, sig, q=4, seed=seed + idx, draws=2)
            eng = verify_engine(
                kind, sig, q=4, seed=seed + 100 + idx, triples=100, pairs=20
            )
            entry = {
                "presentation_counts": pres.counts(),
                "presentation_ok": pres.ok,
                "presentation_failures": list(pres.failures),
                "presentation_skipped": [list(t) for t in pres.skipped],
                "engine_checks": [[n, f] for n, f in eng.checks],
                "engine_ok": eng.ok,
            }
            details[f"{kind}@{s}"] = entry
            ok = ok and pres.ok and eng.ok
            idx += 1
    return ok, details


def _crit_group_degeneration(seed: int):
    configs = (("g", ONE_ZERO), ("ghat", ZERO), ("gp", ONE_ZERO))
    details = {}
    ok = True
    for i, (kind, s) in enumerate(configs):
        rep = verify_group_structure(kind, Sigma.parse(s), q=4, seed=seed + i, rounds=50)
        details[f"{kind}@{s}"] = [[n, f] for n, f in rep.checks]
        ok = ok and rep.ok
    return ok, details


def _crit_determinism(seed: int):
    """Representative randomized reports serialize to identical bytes when
    rerun with the same seed."""

    def twice(make):
        a = json.dumps(make(), sort_keys=True)
        b = json.dumps(make(), sort_keys=True)
        return a == b

    checks = {
        "presentation_report": twice(
            lambda: verify_presentation(
                "g", Sigma.parse(ONE_ZERO), q=2, seed=seed, draws=1
            ).to_json_dict()
        ),
        "engine_report": twice(
            lambda: verify_engine(
                "gp", Sigma.parse("1,1,-2"), q=2, seed=seed, triples=5, pairs=3
            ).to_json_dict()
        ),
        "structure_report": twice(
            lambda: verify_group_structure(
                "gp", Sigma.parse(ONE_ZERO), q=2, seed=seed, rounds=6
            ).to_json_dict()
        ),
        "analysis_report": twice(
            lambda: analyze("gpp", Sigma.parse(ONE_ZERO)).to_json_dict()
        ),
        "relation_report": twice(
            lambda: kac_relation_report(Sigma.parse("1,1,-2")).to_json_dict()
        ),
    }
    return all(checks.values()), checks


CRITERIA: List[Tuple[int, str, Callable[[int], Tuple[bool, Dict]]]] = [
    (1, "jacobi_all_families", _crit_jacobi),
    (2, "kaplansky_iff", _crit_kaplansky_iff),
    (3, "oracle_gp_equivalence", _crit_oracle_equivalence),
    (4, "generic_simplicity", _crit_generic_simplicity),
    (5, "degeneration_g", _crit_degeneration_g),
    (6, "degeneration_gp", _crit_degeneration_gp),
    (7, "degeneration_gpp", _crit_degeneration_gpp),
    (8, "contractions", _crit_contractions),
    (9, "cartan_relation_suite", _crit_kac_suite),
    (10, "s3_scale_action", _crit_s3_scale),
    (11, "group_engine", _crit_group_engine),
    (12, "group_degeneration", _crit_group_degeneration),
    (13, "determinism", _crit_determinism),
]


def run_criterion(index: int, seed: int) -> CriterionResult:
    """Run one numbered criterion with its derived seed."""
    for idx, name, fn in CRITERIA:
        if idx == index:
            ok, details = fn(seed ^ idx)
            return CriterionResult(index=idx, name=name, ok=ok, details=details)
    raise ValueError(f"no criterion numbered {index}")


def run_suite(seed: int = 0, threads: Optional[int] = None) -> SuiteReport:
    """Run all criteria; `threads` (default: SUPERFORM_THREADS or 1) may
    parallelize them without affecting any result or its ordering."""
    if threads is None:
        threads = int(os.environ.get("SUPERFORM_THREADS", "1") or "1")
    indices = [idx for idx, _, _ in CRITERIA]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda i: run_criterion(i, seed), indices))
    else:
        results = [run_criterion(i, seed) for i in indices]
    results.sort(key=lambda r: r.index)
    return SuiteReport(seed=seed, criteria=results)
