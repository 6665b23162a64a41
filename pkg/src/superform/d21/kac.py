"""Contragredient-presentation checks run inside the oracle realization.

Starting from the three pairs of simple odd root vectors and their coroots
(expressed through the sl2 Cartan elements with parameter coefficients), the
report derives the even root vectors, the highest vectors, and the
distinguished simple system, then verifies every bracket relation the
presentation asserts: Cartan-matrix rows, pairings, derived sl2 triples,
highest-vector sums, the second Cartan matrix of the distinguished system,
coroot additivity, and the quartic bracket whose coefficient is the product
of the three parameter coordinates (hence vanishes exactly when one
coordinate does).

All scalars stay exact: polynomial when no parameter is given, rational
otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..scalars import Sigma, sigma_scalars
from ..superalg import Vec, vec_add, vec_is_zero, vec_scale, vec_sub
from .kaplansky import kaplansky_build, odd_name

HALF = Fraction(1, 2)

_CYCLIC = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


def cartan_matrix(sigma: Optional[Sigma] = None) -> List[List[object]]:
    """Cartan matrix of the all-odd simple system: zero diagonal, -s_k off it."""
    s1, s2, s3 = sigma_scalars(sigma)
    s = {1: s1, 2: s2, 3: s3}
    zero = s1 - s1
    return [
        [zero if i == j else -s[6 - i - j] for j in (1, 2, 3)]
        for i in (1, 2, 3)
    ]


def distinguished_cartan_matrix(sigma: Optional[Sigma] = None) -> List[List[object]]:
    """Cartan matrix of the distinguished system (one odd simple root)."""
    s1, s2, s3 = sigma_scalars(sigma)
    zero = s1 - s1
    return [
        [2 * s1, -s1, zero],
        [-s1, zero, -s3],
        [zero, -s3, 2 * s3],
    ]


@dataclass
class KacReport:
    """Outcome of the presentation checks at one parameter value."""

    sigma: Optional[Sigma]
    checks: Dict[str, bool] = field(default_factory=dict)
    failures: Dict[str, str] = field(default_factory=dict)
    quartic: Vec = field(default_factory=dict)
    quartic_is_zero: bool = False

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json_dict(self) -> dict:
        return {
            "sigma": None if self.sigma is None else str(self.sigma),
            "ok": self.ok,
            "checks": {k: self.checks[k] for k in sorted(self.checks)},
            "failures": {k: self.failures[k] for k in sorted(self.failures)},
            "quartic_is_zero": self.quartic_is_zero,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def kac_relation_report(sigma: Optional[Sigma] = None) -> KacReport:
    """Run every presentation check inside the oracle realization."""
    alg = kaplansky_build(sigma)
    s1, s2, s3 = sigma_scalars(sigma)
    s = {1: s1, 2: s2, 3: s3}
    report = KacReport(sigma=sigma)

    def unit(nm: str) -> Vec:
        return alg.unit(alg.index_of(nm))

    def add(*vs: Vec) -> Vec:
        out: Vec = {}
        for v in vs:
            out = vec_add(out, v)
        return out

    def run(name: str, items: List[Tuple[str, Vec, Vec]]) -> None:
        bad = [label for (label, lhs, rhs) in items if not vec_is_zero(vec_sub(lhs, rhs))]
        report.checks[name] = not bad
        if bad:
            report.failures[name] = "failed: " + ", ".join(bad)

    h = {i: unit(f"h{i}") for i in (1, 2, 3)}
    e = {i: unit(f"e{i}") for i in (1, 2, 3)}
    f = {i: unit(f"f{i}") for i in (1, 2, 3)}
    Xb = {
        1: unit(odd_name((-1, 1, 1))),
        2: unit(odd_name((1, -1, 1))),
        3: unit(odd_name((1, 1, -1))),
    }
    Xmb = {
        1: unit(odd_name((1, -1, -1))),
        2: unit(odd_name((-1, 1, -1))),
        3: unit(odd_name((-1, -1, 1))),
    }
    Xth = unit(odd_name((1, 1, 1)))
    Xmth = unit(odd_name((-1, -1, -1)))

    # coroots of the three odd simple roots: +s_i on h_i, -s_m on the others
    Hb = {
        i: add(*(vec_scale(HALF * (s[m] if m == i else -s[m]), h[m]) for m in (1, 2, 3)))
        for i in (1, 2, 3)
    }
    A = cartan_matrix(sigma)

    run("cartan_commutes", [
        (f"[Hb{i},Hb{j}]", alg.bracket(Hb[i], Hb[j]), {})
        for i in (1, 2, 3) for j in (1, 2, 3) if i < j
    ])
    run("cartan_matrix_rows", [
        item
        for i in (1, 2, 3) for j in (1, 2, 3)
        for item in (
            (f"[Hb{i},Xb{j}]", alg.bracket(Hb[i], Xb[j]), vec_scale(A[i - 1][j - 1], Xb[j])),
            (f"[Hb{i},Xmb{j}]", alg.bracket(Hb[i], Xmb[j]), vec_scale(-A[i - 1][j - 1], Xmb[j])),
        )
    ])
    run("odd_simple_pairing", [
        (
            f"[Xb{i},Xmb{j}]",
            alg.bracket(Xb[i], Xmb[j]),
            Hb[i] if i == j else {},
        )
        for i in (1, 2, 3) for j in (1, 2, 3)
    ])
    run("odd_simple_squares", [
        (f"[Xb{i},Xb{i}]", alg.bracket(Xb[i], Xb[i]), {}) for i in (1, 2, 3)
    ] + [
        (f"[Xmb{i},Xmb{i}]", alg.bracket(Xmb[i], Xmb[i]), {}) for i in (1, 2, 3)
    ])

    # derived even root vectors and their coroots
    X2e = {i: alg.bracket(Xb[j], Xb[k]) for i, (j, k) in _CYCLIC.items()}
    Xm2e = {i: vec_scale(-1, alg.bracket(Xmb[j], Xmb[k])) for i, (j, k) in _CYCLIC.items()}
    H2e = {i: vec_scale(-1, add(Hb[j], Hb[k])) for i, (j, k) in _CYCLIC.items()}
    run("even_root_vectors", [
        item
        for i in (1, 2, 3)
        for item in (
            (f"X2e{i}", X2e[i], vec_scale(s[i], e[i])),
            (f"Xm2e{i}", Xm2e[i], vec_scale(s[i], f[i])),
            (f"H2e{i}", H2e[i], vec_scale(s[i], h[i])),
        )
    ])
    run("even_root_relations", [
        item
        for i in (1, 2, 3) for j in (1, 2, 3)
        for item in (
            (
                f"[X2e{i},Xm2e{j}]",
                alg.bracket(X2e[i], Xm2e[j]),
                vec_scale(s[i], H2e[i]) if i == j else {},
            ),
            (
                f"[H2e{i},X2e{j}]",
                alg.bracket(H2e[i], X2e[j]),
                vec_scale(2 * s[i], X2e[j]) if i == j else {},
            ),
            (
                f"[H2e{i},Xm2e{j}]",
                alg.bracket(H2e[i], Xm2e[j]),
                vec_scale(-2 * s[i], Xm2e[j]) if i == j else {},
            ),
        )
    ])

    # highest vectors from each sl2 block, their sum rules, and the pairing
    Xth_i = {i: alg.bracket(X2e[i], Xb[i]) for i in (1, 2, 3)}
    Xmth_i = {i: alg.bracket(Xm2e[i], Xmb[i]) for i in (1, 2, 3)}
    sum_Hb = add(Hb[1], Hb[2], Hb[3])
    run("highest_vectors", [
        item
        for i in (1, 2, 3)
        for item in (
            (f"Xth{i}", Xth_i[i], vec_scale(s[i], Xth)),
            (f"Xmth{i}", Xmth_i[i], vec_scale(s[i], Xmth)),
        )
    ] + [
        ("sum Xth_i", add(*Xth_i.values()), {}),
        ("sum Xmth_i", add(*Xmth_i.values()), {}),
    ] + [
        (
            f"[Xth{j},Xmth{k}]",
            alg.bracket(Xth_i[j], Xmth_i[k]),
            vec_scale(-(s[j] * s[k]), sum_Hb),
        )
        for j in (1, 2, 3) for k in (1, 2, 3)
    ])
    Hth = vec_scale(-1, sum_Hb)
    run("highest_pairing", [
        ("[Xth,Xmth]", alg.bracket(Xth, Xmth), Hth),
        ("sum H2e_i", add(H2e[1], H2e[2], H2e[3]), vec_scale(2, Hth)),
    ])

    # distinguished simple system: even, odd, even
    ha = {
        1: vec_scale(-1, add(Hb[2], Hb[3])),
        2: Hb[2],
        3: vec_scale(-1, add(Hb[2], Hb[1])),
    }
    Xa = {1: X2e[1], 2: Xmb[2], 3: X2e[3]}
    Xma = {1: Xm2e[1], 2: Xb[2], 3: Xm2e[3]}
    Ad = distinguished_cartan_matrix(sigma)
    run("distinguished_matrix_rows", [
        item
        for i in (1, 2, 3) for j in (1, 2, 3)
        for item in (
            (f"[ha{i},Xa{j}]", alg.bracket(ha[i], Xa[j]), vec_scale(Ad[i - 1][j - 1], Xa[j])),
            (f"[ha{i},Xma{j}]", alg.bracket(ha[i], Xma[j]), vec_scale(-Ad[i - 1][j - 1], Xma[j])),
        )
    ])
    run("distinguished_coroots", [
        ("h(a1+a2)", vec_scale(-1, Hb[3]), add(ha[1], ha[2])),
        ("h(a3+a2)", vec_scale(-1, Hb[1]), add(ha[3], ha[2])),
        ("h(a1+a2+a3)", vec_scale(-1, sum_Hb), add(ha[1], ha[2], ha[3])),
        (
            "h(a1+2a2+a3)",
            vec_scale(-1, add(Hb[1], Hb[3])),
            add(ha[1], vec_scale(2, ha[2]), ha[3]),
        ),
    ])

    # quartic bracket through the distinguished system
    quartic = alg.bracket(
        alg.bracket(alg.bracket(Xa[1], Xa[2]), Xa[3]), Xa[2]
    )
    run("quartic_bracket", [
        ("[[[Xa1,Xa2],Xa3],Xa2]", quartic, vec_scale(s[1] * s[2] * s[3], e[2])),
    ])
    report.quartic = quartic
    report.quartic_is_zero = vec_is_zero(quartic)
    return report
