"""The five integral-form families as explicit 17-dimensional structure tables.

All five share one basis naming scheme:

    even: H_2e1 H_2e2 H_2e3   X_2e1 X_2e2 X_2e3   X_-2e1 X_-2e2 X_-2e3
    odd:  X_b1 X_b2 X_b3 X_th  X_-b1 X_-b2 X_-b3 X_-th

The families differ in where the parameter sits:

    g      parameter on even roots and Cartan pairings, odd-odd free of it
    gp     parameter only on the odd-odd brackets (and the H_th combination)
    gpp    parameter on even-root actions, squared on even pairings
    ghat   g with the odd-odd brackets scaled by tau^2, tau = s1*s2*s3
    ghatp  gp with the same odd-odd scaling

The tables are data; their correctness is enforced elsewhere by the graded
Jacobi test, by exact agreement of gp with the formula-built oracle, and by
bracket-preserving embeddings of the other four into the oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Tuple

from ..scalars import PolyScalar, Sigma, sigma_scalars
from ..superalg import LieSuperAlgebra

FAMILY_KEYS = ("g", "gp", "gpp", "ghat", "ghatp")

EVEN_NAMES = [
    "H_2e1", "H_2e2", "H_2e3",
    "X_2e1", "X_2e2", "X_2e3",
    "X_-2e1", "X_-2e2", "X_-2e3",
]
ODD_NAMES = ["X_b1", "X_b2", "X_b3", "X_th", "X_-b1", "X_-b2", "X_-b3", "X_-th"]
BASIS_SPEC = [(nm, 0) for nm in EVEN_NAMES] + [(nm, 1) for nm in ODD_NAMES]

HALF = Fraction(1, 2)


def H(i: int) -> str:
    return f"H_2e{i}"


def Xp(i: int) -> str:
    return f"X_2e{i}"


def Xm(i: int) -> str:
    return f"X_-2e{i}"


def B(i: int) -> str:
    return f"X_b{i}"


def MB(i: int) -> str:
    return f"X_-b{i}"


TH = "X_th"
MTH = "X_-th"


def third(i: int, j: int) -> int:
    """The index k with {i, j, k} = {1, 2, 3} (i != j)."""
    return 6 - i - j


def tau_of(sigma: Optional[Sigma]):
    """The product of the three parameter coordinates in the working ring."""
    s1, s2, s3 = sigma_scalars(sigma)
    return s1 * s2 * s3


def _cartan_rows(br: Dict, weights_on_roots) -> None:
    """Fill the [H_2ei, -] rows given the even-root weight profile.

    weights_on_roots(i, j) is the coefficient of [H_2ei, X_2ej]/2; the odd
    rows are filled by the caller since they differ between families only by
    an overall parameter factor.
    """
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            w = weights_on_roots(i, j)
            if w:
                br[(H(i), Xp(j))] = {Xp(j): 2 * w}
                br[(H(i), Xm(j))] = {Xm(j): -2 * w}


def _odd_cartan_rows(br: Dict, coeff_of_i) -> None:
    """[H_2ei, odd] rows: sign profile (-1)^{delta_ij} on X_bj, +1 on X_th."""
    for i in (1, 2, 3):
        c = coeff_of_i(i)
        for j in (1, 2, 3):
            sign = -1 if i == j else 1
            br[(H(i), B(j))] = {B(j): sign * c}
            br[(H(i), MB(j))] = {MB(j): -sign * c}
        br[(H(i), TH)] = {TH: c}
        br[(H(i), MTH)] = {MTH: -c}


def _g_brackets(s) -> Dict:
    s1, s2, s3 = s
    sv = {1: s1, 2: s2, 3: s3}
    br: Dict[Tuple[str, str], Dict[str, object]] = {}
    _cartan_rows(br, lambda i, j: sv[i] if i == j else 0)
    for i in (1, 2, 3):
        br[(Xp(i), Xm(i))] = {H(i): sv[i]}
    _odd_cartan_rows(br, lambda i: sv[i])
    for i in (1, 2, 3):
        br[(Xp(i), B(i))] = {TH: sv[i]}
        br[(Xm(i), MB(i))] = {MTH: sv[i]}
        br[(Xp(i), MTH)] = {MB(i): sv[i]}
        br[(Xm(i), TH)] = {B(i): sv[i]}
        for j in (1, 2, 3):
            if j != i:
                k = third(i, j)
                br[(Xp(i), MB(j))] = {B(k): sv[i]}
                br[(Xm(i), B(j))] = {MB(k): sv[i]}
    for i in (1, 2, 3):
        for j in (i + 1, i + 2):
            if j <= 3:
                k = third(i, j)
                br[(B(i), B(j))] = {Xp(k): 1}
                br[(MB(i), MB(j))] = {Xm(k): -1}
        br[(B(i), MB(i))] = {
            H(m): (1 - HALF if m == i else -HALF) for m in (1, 2, 3)
        }
        br[(B(i), MTH)] = {Xm(i): 1}
        br[(MB(i), TH)] = {Xp(i): -1}
    br[(TH, MTH)] = {H(m): HALF for m in (1, 2, 3)}
    return br


def _gp_brackets(s) -> Dict:
    s1, s2, s3 = s
    sv = {1: s1, 2: s2, 3: s3}
    br: Dict[Tuple[str, str], Dict[str, object]] = {}
    _cartan_rows(br, lambda i, j: 1 if i == j else 0)
    for i in (1, 2, 3):
        br[(Xp(i), Xm(i))] = {H(i): 1}
    _odd_cartan_rows(br, lambda i: 1)
    for i in (1, 2, 3):
        br[(Xp(i), B(i))] = {TH: 1}
        br[(Xm(i), MB(i))] = {MTH: 1}
        br[(Xp(i), MTH)] = {MB(i): 1}
        br[(Xm(i), TH)] = {B(i): 1}
        for j in (1, 2, 3):
            if j != i:
                k = third(i, j)
                br[(Xp(i), MB(j))] = {B(k): 1}
                br[(Xm(i), B(j))] = {MB(k): 1}
    for i in (1, 2, 3):
        for j in (i + 1, i + 2):
            if j <= 3:
                k = third(i, j)
                br[(B(i), B(j))] = {Xp(k): sv[k]}
                br[(MB(i), MB(j))] = {Xm(k): -1 * sv[k]}
        br[(B(i), MB(i))] = {
            H(m): (sv[m] - HALF * sv[m] if m == i else -HALF * sv[m]) for m in (1, 2, 3)
        }
        br[(B(i), MTH)] = {Xm(i): sv[i]}
        br[(MB(i), TH)] = {Xp(i): -1 * sv[i]}
    br[(TH, MTH)] = {H(m): HALF * sv[m] for m in (1, 2, 3)}
    return br


def _gpp_brackets(s) -> Dict:
    s1, s2, s3 = s
    sv = {1: s1, 2: s2, 3: s3}
    br: Dict[Tuple[str, str], Dict[str, object]] = {}
    _cartan_rows(br, lambda i, j: 1 if i == j else 0)
    for i in (1, 2, 3):
        br[(Xp(i), Xm(i))] = {H(i): sv[i] * sv[i]}
    _odd_cartan_rows(br, lambda i: 1)
    for i in (1, 2, 3):
        br[(Xp(i), B(i))] = {TH: sv[i]}
        br[(Xm(i), MB(i))] = {MTH: sv[i]}
        br[(Xp(i), MTH)] = {MB(i): sv[i]}
        br[(Xm(i), TH)] = {B(i): sv[i]}
        for j in (1, 2, 3):
            if j != i:
                k = third(i, j)
                br[(Xp(i), MB(j))] = {B(k): sv[i]}
                br[(Xm(i), B(j))] = {MB(k): sv[i]}
    for i in (1, 2, 3):
        for j in (i + 1, i + 2):
            if j <= 3:
                k = third(i, j)
                br[(B(i), B(j))] = {Xp(k): 1}
                br[(MB(i), MB(j))] = {Xm(k): -1}
        br[(B(i), MB(i))] = {
            H(m): (sv[m] - HALF * sv[m] if m == i else -HALF * sv[m]) for m in (1, 2, 3)
        }
        br[(B(i), MTH)] = {Xm(i): 1}
        br[(MB(i), TH)] = {Xp(i): -1}
    br[(TH, MTH)] = {H(m): HALF * sv[m] for m in (1, 2, 3)}
    return br


_BASE_BUILDERS = {"g": _g_brackets, "gp": _gp_brackets, "gpp": _gpp_brackets}


def contract(alg: LieSuperAlgebra, tau=None) -> LieSuperAlgebra:
    """Rescale all odd-odd brackets by tau^2 (default tau = s1*s2*s3).

    This is the degeneration that turns g into ghat and gp into ghatp: at a
    parameter with a vanishing coordinate every odd-odd bracket dies.
    """
    if tau is None:
        if alg.is_symbolic:
            tau = tau_of(None)
        elif alg.sigma is not None:
            tau = tau_of(alg.sigma)
        else:
            raise ValueError("no parameter attached; pass tau explicitly")
    t2 = tau * tau
    entries = {}
    for (i, j), terms in alg.table.entries.items():
        if alg.basis[i].parity == 1 and alg.basis[j].parity == 1:
            scaled = {k: t2 * c for k, c in terms.items()}
            scaled = {k: c for k, c in scaled.items() if c}
            if scaled:
                entries[(i, j)] = scaled
        else:
            entries[(i, j)] = dict(terms)
    out = LieSuperAlgebra(f"{alg.name}^", alg.basis, entries, alg.sigma, alg.is_rational)
    return out


def family_build(kind: str, sigma: Optional[Sigma] = None) -> LieSuperAlgebra:
    """Build one of the five families, symbolically or at a rational triple."""
    key = kind.lower()
    if key not in FAMILY_KEYS:
        raise ValueError(f"unknown family {kind!r}; expected one of {FAMILY_KEYS}")
    base_key = {"ghat": "g", "ghatp": "gp"}.get(key, key)
    scalars = sigma_scalars(sigma)
    alg = LieSuperAlgebra.from_named(
        base_key, BASIS_SPEC, _BASE_BUILDERS[base_key](scalars), sigma=sigma
    )
    if key in ("ghat", "ghatp"):
        alg = contract(alg)
    alg.name = key if sigma is None else f"{key}@({sigma})"
    return alg


# positions of the designated Cartan vectors in the shared basis order
CARTAN_INDICES = (0, 1, 2)
