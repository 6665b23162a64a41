"""Isomorphisms between family members: permutation/scale twists and
base changes between the five families at one parameter value.

A pair (perm, c) acts on parameters by permuting the three coordinates and
scaling them by c; the induced map on algebras permutes the three sl2 blocks,
scales raising/lowering vectors by c and c^-1, and scales each odd vector by
c to the power (number of plus signs in its pattern) - 2.  These exponents
make every structure constant match on the nose; the verification is run by
the callers through verify_morphism, not assumed here.

Base changes between families at a fixed parameter value are rescalings of
basis vectors by coordinates of the parameter (or their inverses), composed
through the gp family as a hub.  They exist as isomorphisms only when all
three coordinates are nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Dict, Tuple

from ..scalars import Sigma, as_fraction
from ..superalg import LieSuperAlgebra, LinearMap
from .families import B, H, MB, MTH, TH, Xm, Xp, family_build, tau_of
from .kaplansky import FAMILY_TO_KAPLANSKY_NAMES

Perm = Tuple[int, int, int]  # perm[i-1] = image of i, values in {1,2,3}

ALL_PERMS = tuple(permutations((1, 2, 3)))

# sign pattern of each odd family vector, read off its oracle counterpart
_ODD_PATTERN: Dict[str, Tuple[int, ...]] = {
    nm: tuple(1 if ch == "+" else -1 for ch in FAMILY_TO_KAPLANSKY_NAMES[nm][2:])
    for nm in (B(1), B(2), B(3), TH, MB(1), MB(2), MB(3), MTH)
}
_PATTERN_TO_ODD = {pat: nm for nm, pat in _ODD_PATTERN.items()}


def _check_perm(perm: Perm) -> Perm:
    if sorted(perm) != [1, 2, 3]:
        raise ValueError(f"not a permutation of (1,2,3): {perm}")
    return tuple(perm)


def perm_inverse(perm: Perm) -> Perm:
    inv = [0, 0, 0]
    for i, v in enumerate(perm, start=1):
        inv[v - 1] = i
    return tuple(inv)


def perm_compose(outer: Perm, inner: Perm) -> Perm:
    """(outer o inner)(i) = outer(inner(i))."""
    return tuple(outer[inner[i - 1] - 1] for i in (1, 2, 3))


def sigma_image(sigma: Sigma, perm: Perm, c) -> Sigma:
    """The parameter reached by the (perm, c) twist: s*_j = c * s_{perm^-1(j)}."""
    perm = _check_perm(perm)
    c = as_fraction(c)
    inv = perm_inverse(perm)
    return Sigma(*(c * sigma[inv[j - 1]] for j in (1, 2, 3)))


def s3_scale_iso(kind: str, sigma: Sigma, perm: Perm, c) -> LinearMap:
    """The twist isomorphism family(kind, sigma) -> family(kind, sigma*).

    On gp it is defined for every parameter value; for the other families it
    is conjugated through gp by base changes, which need all coordinates
    nonzero.
    """
    perm = _check_perm(perm)
    c = as_fraction(c)
    if c == 0:
        raise ValueError("scale factor must be nonzero")
    target_sigma = sigma_image(sigma, perm, c)
    if kind.lower() != "gp":
        fwd = basis_change(kind, "gp", sigma)
        core = s3_scale_iso("gp", sigma, perm, c)
        back = basis_change("gp", kind, target_sigma)
        return fwd.then(core).then(back)
    src = family_build("gp", sigma)
    tgt = family_build("gp", target_sigma)
    assign: Dict[str, Dict[str, object]] = {}
    for i in (1, 2, 3):
        t = perm[i - 1]
        assign[H(i)] = {H(t): 1}
        assign[Xp(i)] = {Xp(t): c}
        assign[Xm(i)] = {Xm(t): Fraction(1) / c}
    inv = perm_inverse(perm)
    for nm, pat in _ODD_PATTERN.items():
        plus = sum(1 for e in pat if e == 1)
        moved = tuple(pat[inv[j - 1] - 1] for j in (1, 2, 3))
        assign[nm] = {_PATTERN_TO_ODD[moved]: c ** (plus - 2)}
    return LinearMap.from_named(src, tgt, assign)


def _rescaling(src: LieSuperAlgebra, tgt: LieSuperAlgebra, even_h, even_x, odd) -> LinearMap:
    """Diagonal map scaling H_2ei by even_h(i), X_{+-2ei} by even_x(i), odd by odd."""
    assign: Dict[str, Dict[str, object]] = {}
    for i in (1, 2, 3):
        assign[H(i)] = {H(i): even_h(i)}
        assign[Xp(i)] = {Xp(i): even_x(i)}
        assign[Xm(i)] = {Xm(i): even_x(i)}
    for nm in _ODD_PATTERN:
        assign[nm] = {nm: odd}
    return LinearMap.from_named(src, tgt, assign)


def basis_change(kind_from: str, kind_to: str, sigma: Sigma) -> LinearMap:
    """The rescaling isomorphism family(kind_from, s) -> family(kind_to, s).

    Requires a specialized parameter with all coordinates nonzero unless
    the two family names coincide (when the identity is returned).
    """
    a, b = kind_from.lower(), kind_to.lower()
    src = family_build(a, sigma)
    if a == b:
        return LinearMap(src, src, {i: src.unit(i) for i in range(src.dim)})
    if not sigma.in_V_times:
        raise ValueError(
            f"base change {a}->{b} is an isomorphism only when all three "
            f"coordinates are nonzero; got {sigma}"
        )
    one = Fraction(1)
    tau = tau_of(sigma)

    def step(frm: str, to: str) -> LinearMap:
        s = family_build(frm, sigma)
        t = family_build(to, sigma)
        sv = lambda i: sigma[i]
        if (frm, to) == ("gp", "g"):
            return _rescaling(s, t, lambda i: one / sv(i), lambda i: one / sv(i), one)
        if (frm, to) == ("g", "gp"):
            return _rescaling(s, t, lambda i: sv(i), lambda i: sv(i), one)
        if (frm, to) == ("gpp", "gp"):
            return _rescaling(s, t, lambda i: one, lambda i: sv(i), one)
        if (frm, to) == ("gp", "gpp"):
            return _rescaling(s, t, lambda i: one, lambda i: one / sv(i), one)
        if (frm, to) == ("ghat", "g"):
            return _rescaling(s, t, lambda i: one, lambda i: one, tau)
        if (frm, to) == ("g", "ghat"):
            return _rescaling(s, t, lambda i: one, lambda i: one, one / tau)
        if (frm, to) == ("ghatp", "gp"):
            return _rescaling(s, t, lambda i: one, lambda i: one, tau)
        if (frm, to) == ("gp", "ghatp"):
            return _rescaling(s, t, lambda i: one, lambda i: one, one / tau)
        raise AssertionError(f"no primitive step {frm}->{to}")

    to_gp = {
        "gp": [],
        "g": [("g", "gp")],
        "gpp": [("gpp", "gp")],
        "ghat": [("ghat", "g"), ("g", "gp")],
        "ghatp": [("ghatp", "gp")],
    }
    from_gp = {
        "gp": [],
        "g": [("gp", "g")],
        "gpp": [("gp", "gpp")],
        "ghat": [("gp", "g"), ("g", "ghat")],
        "ghatp": [("gp", "ghatp")],
    }
    chain = to_gp[a] + from_gp[b]
    out = None
    for frm, to in chain:
        leg = step(frm, to)
        out = leg if out is None else out.then(leg)
    return out
