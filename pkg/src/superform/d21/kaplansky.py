"""Closed-formula realization of the generic 9|8-dimensional superalgebra.

The even part is sl2 x sl2 x sl2 with standard triples (e_i, h_i, f_i); the
odd part has basis v_eps indexed by sign triples eps in {+,-}^3, on which the
i-th sl2 acts through the i-th sign slot.  The odd-odd bracket is built from
the antisymmetric pairing psi on sign pairs and the symmetric sl2-valued
pairing p_k, summed over the three blocks; the parameter triple enters only
through p_k.

Everything here is computed from these formulas -- never transcribed from the
family tables -- so it serves as an independent oracle for them.  The graded
Jacobi identity holds exactly when the parameter triple sums to zero; passing
an off-plane triple is allowed and produces an algebra whose Jacobi check
fails with a witness.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Tuple

from ..scalars import PolyScalar, Sigma, sigma_scalars
from ..superalg import LieSuperAlgebra

# odd basis order: lexicographic in the sign pattern with + before -
EPS_ORDER = [
    (1, 1, 1),
    (1, 1, -1),
    (1, -1, 1),
    (1, -1, -1),
    (-1, 1, 1),
    (-1, 1, -1),
    (-1, -1, 1),
    (-1, -1, -1),
]

_PSI = {
    (1, -1): Fraction(1, 2),
    (-1, 1): Fraction(-1, 2),
    (1, 1): Fraction(0),
    (-1, -1): Fraction(0),
}


def odd_name(eps: Tuple[int, int, int]) -> str:
    return "v_" + "".join("+" if e > 0 else "-" for e in eps)


def _flip(eps: Tuple[int, int, int], i: int) -> Tuple[int, int, int]:
    out = list(eps)
    out[i - 1] = -out[i - 1]
    return tuple(out)


def _p_pairing(k: int, a: int, b: int, s_k):
    """The sl2_k-valued symmetric pairing on sign pairs (a, b)."""
    if a == 1 and b == 1:
        return {f"e{k}": -2 * s_k}
    if a == -1 and b == -1:
        return {f"f{k}": 2 * s_k}
    return {f"h{k}": s_k}


def odd_odd_bracket(eps, delta, scalars) -> Dict[str, object]:
    """[v_eps, v_delta] from the psi/p formulas, as name -> coefficient."""
    out: Dict[str, object] = {}
    for k in (1, 2, 3):
        a, b = [t for t in (1, 2, 3) if t != k]
        coeff = 2 * _PSI[(eps[a - 1], delta[a - 1])] * _PSI[(eps[b - 1], delta[b - 1])]
        if not coeff:
            continue
        for name, c in _p_pairing(k, eps[k - 1], delta[k - 1], scalars[k - 1]).items():
            val = out.get(name)
            term = coeff * c
            val = term if val is None else val + term
            if val:
                out[name] = val
            else:
                out.pop(name, None)
    return out


def kaplansky_build(sigma: Optional[Sigma] = None) -> LieSuperAlgebra:
    """The oracle algebra, symbolic when sigma is None.

    Any rational triple is accepted; the structure table always makes sense
    and satisfies the graded Jacobi identity iff the triple sums to zero.
    """
    scalars = sigma_scalars(sigma)
    basis = []
    for i in (1, 2, 3):
        basis += [(f"e{i}", 0), (f"h{i}", 0), (f"f{i}", 0)]
    basis += [(odd_name(eps), 1) for eps in EPS_ORDER]

    brackets: Dict[Tuple[str, str], Dict[str, object]] = {}
    for i in (1, 2, 3):
        brackets[(f"h{i}", f"e{i}")] = {f"e{i}": 2}
        brackets[(f"h{i}", f"f{i}")] = {f"f{i}": -2}
        brackets[(f"e{i}", f"f{i}")] = {f"h{i}": 1}

    for eps in EPS_ORDER:
        v = odd_name(eps)
        for i in (1, 2, 3):
            brackets[(f"h{i}", v)] = {v: eps[i - 1]}
            if eps[i - 1] == -1:
                brackets[(f"e{i}", v)] = {odd_name(_flip(eps, i)): 1}
            else:
                brackets[(f"f{i}", v)] = {odd_name(_flip(eps, i)): 1}

    for a, eps in enumerate(EPS_ORDER):
        for delta in EPS_ORDER[a:]:
            terms = odd_odd_bracket(eps, delta, scalars)
            if terms:
                brackets[(odd_name(eps), odd_name(delta))] = terms

    name = "oracle" if sigma is None else f"oracle@({sigma})"
    return LieSuperAlgebra.from_named(name, basis, brackets, sigma=sigma)


# How the uniform family basis names correspond to the oracle basis.  The
# Cartans/root vectors of the three sl2 blocks carry the even names; the odd
# cube realizes the four positive odd weights and their negatives.
FAMILY_TO_KAPLANSKY_NAMES = {
    "H_2e1": "h1",
    "H_2e2": "h2",
    "H_2e3": "h3",
    "X_2e1": "e1",
    "X_2e2": "e2",
    "X_2e3": "e3",
    "X_-2e1": "f1",
    "X_-2e2": "f2",
    "X_-2e3": "f3",
    "X_b1": "v_-++",
    "X_b2": "v_+-+",
    "X_b3": "v_++-",
    "X_th": "v_+++",
    "X_-b1": "v_+--",
    "X_-b2": "v_-+-",
    "X_-b3": "v_--+",
    "X_-th": "v_---",
}

CARTAN_INDICES = (1, 4, 7)  # positions of h1, h2, h3 in the oracle basis
