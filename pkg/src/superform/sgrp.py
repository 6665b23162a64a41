"""Group points of the five families over finite Grassmann algebras.

A point is kept in even/odd normal form

    g = E * (1 + eta_1 X_b1)(1 + eta_2 X_b2)(1 + eta_3 X_b3)(1 + eta_4 X_th)
          * (1 + eta_5 X_-b1)(1 + eta_6 X_-b2)(1 + eta_7 X_-b3)(1 + eta_8 X_-th)

with E an even-group point and each eta an odd element of the coefficient
Grassmann algebra.  The even part is stored through its adjoint action on the
17-dimensional Lie superalgebra (a block 9+8 matrix over the even subalgebra)
together with explicit central coordinates (a, u, b) for every degenerate
factor of the g/ghat families, where the whole sl2-block acts trivially and
the adjoint matrix alone would forget the factor.

Generators:

    unipotent(i, sign, a)    x_{+-2e_i}(a),  a even
    toral(alpha, u)          h_alpha(u),     u an even unit, alpha in 2e1..2e3, th
    toral_nilexp(alpha, n)   exp(n H_alpha), n even nilpotent
    odd_gen(name, eta)       x_gamma(eta),   eta odd

Products are normalized exactly: odd atoms crossing each other emit the even
correction exp(eta' eta [X, Y]) which is pushed left into E, conjugating the
atoms it passes (each pass sprays atoms of strictly higher Grassmann degree,
so the rewriting terminates).  All arithmetic is exact over QQ.

One representational gap is accepted: h_th(u) carries no central u-coordinate
(its central component would need a square root of u), so the relation tying
the product of the three h_{2e_i}(u) to h_th(u)^2 in the g/ghat families is
certified at nondegenerate parameters only; its exp-parametrized form holds at
every parameter and is always checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .scalars import Sigma
from .weil import WeilAlgebra, WeilElement
from .d21.families import B, FAMILY_KEYS, MB, MTH, TH, family_build, third

N_EVEN = 9
N_ODD = 8
DIM = 17
ODD_BASE = 9

TORAL_KEYS = ("2e1", "2e2", "2e3", "th")


def _h_idx(i: int) -> int:
    return i - 1


def _xp_idx(i: int) -> int:
    return 2 + i


def _xm_idx(i: int) -> int:
    return 5 + i


def _block(i: int) -> Tuple[int, int, int]:
    return (_h_idx(i), _xp_idx(i), _xm_idx(i))


def _rat_inverse(mat: List[List[Fraction]]) -> List[List[Fraction]]:
    """Exact inverse of a square matrix over QQ (Gauss-Jordan)."""
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular over QQ")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = Fraction(1) / aug[col][col]
        aug[col] = [c * inv_p for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class GroupElement:
    """A group point in normal form; build through a GroupContext."""

    __slots__ = ("ctx", "ad", "central", "odd")

    def __init__(self, ctx: "GroupContext", ad, central, odd):
        self.ctx = ctx
        self.ad = tuple({i: w for i, w in col.items() if w} for col in ad)
        self.central = {i: tuple(slot) for i, slot in central.items()}
        self.odd = tuple(odd)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.ctx.multiply(self, other)

    def inverse(self) -> "GroupElement":
        return self.ctx.inverse(self)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (
            self.ctx is other.ctx
            and self.ad == other.ad
            and self.central == other.central
            and self.odd == other.odd
        )

    __hash__ = None

    def is_identity(self) -> bool:
        return self == self.ctx.identity()

    def __repr__(self):
        nontrivial_cols = sum(
            1 for j, col in enumerate(self.ad) if col != {j: self.ctx.weil.one()}
        )
        odd_count = sum(1 for e in self.odd if e)
        return (
            f"GroupElement({self.ctx.kind}@{self.ctx.sigma}, "
            f"{nontrivial_cols} mixed columns, {odd_count} odd slots)"
        )

    def to_json_dict(self) -> dict:
        """Full coordinate dump: adjoint columns as Grassmann strings, central
        coordinates, odd slot coefficients."""
        names = [b.name for b in self.ctx.alg.basis]
        ad = {}
        for j, col in enumerate(self.ad):
            entries = {names[i]: str(w) for i, w in sorted(col.items())}
            if entries != {names[j]: str(self.ctx.weil.one())}:
                ad[names[j]] = entries
        central = {
            str(i): [str(a), str(u), str(b)]
            for i, (a, u, b) in sorted(self.central.items())
        }
        odd = {
            names[ODD_BASE + k]: str(e) for k, e in enumerate(self.odd) if e
        }
        return {
            "kind": self.ctx.kind,
            "sigma": str(self.ctx.sigma),
            "q": self.ctx.weil.q,
            "ad": ad,
            "central": central,
            "odd": odd,
        }


class GroupContext:
    """Arithmetic for the points of one family over one Grassmann algebra."""

    def __init__(self, kind: str, sigma: Sigma, q: int = 4):
        key = kind.lower()
        if key not in FAMILY_KEYS:
            raise ValueError(f"unknown family {kind!r}; expected one of {FAMILY_KEYS}")
        if not sigma.in_V:
            raise ValueError(f"parameter {sigma} is off the constraint plane")
        if not sigma.is_integral:
            raise ValueError(
                f"group points need an integral parameter triple, got {sigma}"
            )
        self.kind = key
        self.sigma = sigma
        self.weil = WeilAlgebra(q)
        self.alg = family_build(key, sigma)
        self._one = self.weil.one()
        self._zero = self.weil.zero()

        # rational ad-matrix of every basis vector, stored as column dicts
        self.admat: List[Dict[int, Dict[int, Fraction]]] = []
        for m in range(DIM):
            cols = {}
            for j in range(DIM):
                v = self.alg.bracket_basis(m, j)
                if v:
                    cols[j] = v
            self.admat.append(cols)

        # Cartan combination generating h_th, as coefficients on H_2e1..H_2e3
        if key in ("g", "ghat"):
            self.theta_coeffs = {i: Fraction(1, 2) for i in (1, 2, 3)}
        else:
            self.theta_coeffs = {i: Fraction(1, 2) * sigma[i] for i in (1, 2, 3)}

        # diagonal weight profile of each toral generator
        self.toral_diag: Dict[str, List[Fraction]] = {}
        for i in (1, 2, 3):
            self.toral_diag[f"2e{i}"] = self._diag_of(_h_idx(i))
        theta = [Fraction(0)] * DIM
        for i in (1, 2, 3):
            for j, w in enumerate(self._diag_of(_h_idx(i))):
                theta[j] += self.theta_coeffs[i] * w
        self.toral_diag["th"] = theta

        # degenerate sl2-blocks of g/ghat keep explicit central coordinates
        if key in ("g", "ghat"):
            self.central_positions = sigma.zero_positions()
        else:
            self.central_positions = ()

        masks = range(self.weil.dim)
        self.even_masks = [m for m in masks if m.bit_count() % 2 == 0]
        self.odd_masks = [m for m in masks if m.bit_count() % 2 == 1]

    # --- basic structure ---------------------------------------------------

    def _diag_of(self, m: int) -> List[Fraction]:
        diag = [Fraction(0)] * DIM
        for j, col in self.admat[m].items():
            rest = {r for r in col if r != j}
            if rest:
                raise ValueError("toral generator is not diagonal on the basis")
            diag[j] = col.get(j, Fraction(0))
        return diag

    def _identity_cols(self):
        return [{j: self._one} for j in range(DIM)]

    def _identity_central(self):
        return {i: (self._zero, self._one, self._zero) for i in self.central_positions}

    def identity(self) -> GroupElement:
        return GroupElement(
            self, self._identity_cols(), self._identity_central(), [self._zero] * N_ODD
        )

    def _coerce_even(self, a) -> WeilElement:
        if isinstance(a, (int, Fraction)):
            a = self.weil.const(a)
        if not isinstance(a, WeilElement) or a.alg.q != self.weil.q:
            raise ValueError("expected an element of the context Grassmann algebra")
        if a.parity() not in (0,):
            raise ValueError("expected an even coefficient")
        return a

    def _coerce_odd(self, eta) -> WeilElement:
        if isinstance(eta, int) and eta == 0:
            return self._zero
        if not isinstance(eta, WeilElement) or eta.alg.q != self.weil.q:
            raise ValueError("expected an element of the context Grassmann algebra")
        if eta and eta.parity() != 1:
            raise ValueError("expected an odd coefficient")
        return eta

    def upow(self, u: WeilElement, k) -> WeilElement:
        k = Fraction(k)
        if k.denominator != 1:
            raise ValueError(f"unit powers must be integral, got exponent {k}")
        k = k.numerator
        if k >= 0:
            return u ** k
        return u.invert_unit() ** (-k)

    # --- generators ----------------------------------------------------------

    def unipotent(self, i: int, sign: int, a) -> GroupElement:
        """x_{2e_i}(a) for sign +1, x_{-2e_i}(a) for sign -1."""
        a = self._coerce_even(a)
        idx = _xp_idx(i) if sign > 0 else _xm_idx(i)
        mat = self.admat[idx]
        cols = self._identity_cols()
        half_sq = a * a * Fraction(1, 2)
        for j, col in mat.items():
            acc = dict(cols[j])
            for r, c in col.items():
                acc[r] = acc.get(r, self._zero) + a * c
                second = mat.get(r)
                if second:
                    for r2, c2 in second.items():
                        acc[r2] = acc.get(r2, self._zero) + half_sq * (c * c2)
            cols[j] = acc
        central = self._identity_central()
        if i in self.central_positions:
            aa, uu, bb = central[i]
            central[i] = (aa + a, uu, bb) if sign > 0 else (aa, uu, bb + a)
        return GroupElement(self, cols, central, [self._zero] * N_ODD)

    def toral(self, alpha: str, u) -> GroupElement:
        """h_alpha(u) for an even unit u; acts diagonally with integer weights."""
        if alpha not in TORAL_KEYS:
            raise ValueError(f"toral label must be one of {TORAL_KEYS}")
        u = self._coerce_even(u)
        if u.body == 0:
            raise ValueError("toral argument must be a unit (nonzero body)")
        powers: Dict[int, WeilElement] = {}

        def upk(k: Fraction) -> WeilElement:
            key = int(k)
            if key not in powers:
                powers[key] = self.upow(u, key)
            return powers[key]

        cols = []
        for j, k in enumerate(self.toral_diag[alpha]):
            if k.denominator != 1:
                raise ValueError("toral weight is not integral; use toral_nilexp")
            cols.append({j: upk(k)})
        central = self._identity_central()
        for i in self.central_positions:
            if alpha == f"2e{i}":
                aa, uu, bb = central[i]
                central[i] = (aa, uu * u, bb)
            # alpha == "th" leaves the slot untouched (documented gap)
        return GroupElement(self, cols, central, [self._zero] * N_ODD)

    def toral_nilexp(self, alpha: str, n) -> GroupElement:
        """exp(n H_alpha) for even nilpotent n; defined at every parameter."""
        if alpha not in TORAL_KEYS:
            raise ValueError(f"toral label must be one of {TORAL_KEYS}")
        n = self._coerce_even(n)
        if n.body != 0:
            raise ValueError("exp-parametrized toral argument must be nilpotent")
        cache: Dict[Fraction, WeilElement] = {}

        def ex(k: Fraction) -> WeilElement:
            if k not in cache:
                cache[k] = (n * k).exp_nilpotent()
            return cache[k]

        cols = [{j: ex(k)} for j, k in enumerate(self.toral_diag[alpha])]
        central = self._identity_central()
        for i in self.central_positions:
            if alpha == f"2e{i}":
                c = Fraction(1)
            elif alpha == "th":
                c = self.theta_coeffs[i]
            else:
                c = Fraction(0)
            if c:
                aa, uu, bb = central[i]
                central[i] = (aa, uu * ex(c), bb)
        return GroupElement(self, cols, central, [self._zero] * N_ODD)

    def odd_gen(self, name: str, eta) -> GroupElement:
        """x_gamma(eta) for gamma one of the eight odd root names."""
        idx = self.alg.index_of(name)
        if idx < ODD_BASE:
            raise ValueError(f"{name} is not an odd basis vector")
        eta = self._coerce_odd(eta)
        odd = [self._zero] * N_ODD
        odd[idx - ODD_BASE] = eta
        return GroupElement(self, self._identity_cols(), self._identity_central(), odd)

    # --- even-part arithmetic ---------------------------------------------

    @staticmethod
    def _compose(outer, inner):
        """Matrix of outer o inner; entries of the inner map multiply from the
        left so that odd coefficients pass each other with the right sign."""
        out = []
        for j in range(DIM):
            col: Dict[int, WeilElement] = {}
            for k, c in inner[j].items():
                ocol = outer[k]
                for i, w in ocol.items():
                    v = c * w
                    if not v:
                        continue
                    prev = col.get(i)
                    s = v if prev is None else prev + v
                    if s:
                        col[i] = s
                    else:
                        col.pop(i, None)
            out.append(col)
        return out

    def _central_mul(self, c1, c2):
        out = {}
        for i in self.central_positions:
            a1, u1, b1 = c1[i]
            a2, u2, b2 = c2[i]
            out[i] = (a1 + a2, u1 * u2, b1 + b2)
        return out

    def _block_inverse(self, cols, indices):
        if all(set(cols[j]) <= {j} for j in indices):
            return {
                j: {j: cols[j].get(j, self._zero).invert_unit()} for j in indices
            }
        n = len(indices)
        pos = {idx: t for t, idx in enumerate(indices)}
        body = [[Fraction(0)] * n for _ in range(n)]
        nil = [[self._zero] * n for _ in range(n)]
        for j in indices:
            for i, w in cols[j].items():
                body[pos[i]][pos[j]] = w.body
                np_ = w.nilpart()
                if np_:
                    nil[pos[i]][pos[j]] = np_
        binv = _rat_inverse(body)

        def mul_rat(rat, mat):
            out = [[self._zero] * n for _ in range(n)]
            for i in range(n):
                for k in range(n):
                    c = rat[i][k]
                    if not c:
                        continue
                    row = mat[k]
                    for j in range(n):
                        b = row[j]
                        if b:
                            out[i][j] = out[i][j] + c * b
            return out

        def mul(mata, matb):
            out = [[self._zero] * n for _ in range(n)]
            for i in range(n):
                rowa = mata[i]
                for k in range(n):
                    a = rowa[k]
                    if not a:
                        continue
                    rowb = matb[k]
                    for j in range(n):
                        b = rowb[j]
                        if b:
                            out[i][j] = out[i][j] + a * b
            return out

        t = mul_rat([[-c for c in row] for row in binv], nil)
        binv_const = [[self.weil.const(binv[i][j]) for j in range(n)] for i in range(n)]
        series = [list(row) for row in binv_const]
        power = [
            [self._one if i == j else self._zero for j in range(n)] for i in range(n)
        ]
        while True:
            power = mul(power, t)
            if all(not e for row in power for e in row):
                break
            addend = mul(power, binv_const)
            series = [
                [series[i][j] + addend[i][j] for j in range(n)] for i in range(n)
            ]
        out = {}
        for j in indices:
            col = {}
            for i in indices:
                w = series[pos[i]][pos[j]]
                if w:
                    col[i] = w
            out[j] = col
        return out

    def _ad_inverse(self, cols):
        inv_even = self._block_inverse(cols, list(range(N_EVEN)))
        inv_odd = self._block_inverse(cols, list(range(ODD_BASE, DIM)))
        return [inv_even[j] for j in range(N_EVEN)] + [
            inv_odd[j] for j in range(ODD_BASE, DIM)
        ]

    # --- normal form --------------------------------------------------------

    def _correction_ad(self, n: WeilElement, z: Dict[int, Fraction]):
        cols = self._identity_cols()
        for m, zc in z.items():
            for j, col in self.admat[m].items():
                acc = dict(cols[j])
                for r, c in col.items():
                    w = acc.get(r, self._zero) + n * (zc * c)
                    if w:
                        acc[r] = w
                    else:
                        acc.pop(r, None)
                cols[j] = acc
        return cols

    def _central_absorb(self, central, n: WeilElement, z: Dict[int, Fraction]):
        out = dict(central)
        for i in self.central_positions:
            aa, uu, bb = out[i]
            zp = z.get(_xp_idx(i))
            if zp:
                aa = aa + n * zp
            zm = z.get(_xm_idx(i))
            if zm:
                bb = bb + n * zm
            zh = z.get(_h_idx(i))
            if zh:
                uu = uu * (n * zh).exp_nilpotent()
            out[i] = (aa, uu, bb)
        return out

    def _normalize(self, ad, central, atoms) -> GroupElement:
        work = [(b, eta) for b, eta in atoms if eta]
        fuel = 100000
        while True:
            fuel -= 1
            if fuel < 0:
                raise RuntimeError("odd normal form rewriting did not terminate")
            changed = False
            k = 0
            while k + 1 < len(work):
                b1, e1 = work[k]
                b2, e2 = work[k + 1]
                if b1 == b2:
                    merged = e1 + e2
                    work[k : k + 2] = [(b1, merged)] if merged else []
                    changed = True
                    break
                if b1 > b2:
                    work[k], work[k + 1] = (b2, e2), (b1, e1)
                    n = e2 * e1
                    if n:
                        z = self.alg.bracket_basis(b1, b2)
                        if z:
                            ad = self._compose(ad, self._correction_ad(n, z))
                            central = self._central_absorb(central, n, z)
                            prefix = []
                            for b0, e0 in work[:k]:
                                prefix.append((b0, e0))
                                spill = self.alg.bracket(z, {b0: Fraction(1)})
                                for c, w in spill.items():
                                    sprayed = -(e0 * n) * w
                                    if sprayed:
                                        prefix.append((c, sprayed))
                            work[:k] = prefix
                    changed = True
                    break
                k += 1
            if not changed:
                break
        slots = [self._zero] * N_ODD
        for b, eta in work:
            slots[b - ODD_BASE] = eta
        return GroupElement(self, ad, central, slots)

    # --- group operations ------------------------------------------------------

    def _check_same(self, g1: GroupElement, g2: GroupElement):
        if g1.ctx is not self or g2.ctx is not self:
            raise ValueError("group elements belong to a different context")

    def multiply(self, g1: GroupElement, g2: GroupElement) -> GroupElement:
        self._check_same(g1, g2)
        ad = self._compose(g1.ad, g2.ad)
        central = self._central_mul(g1.central, g2.central)
        atoms1 = [(ODD_BASE + k, e) for k, e in enumerate(g1.odd) if e]
        atoms2 = [(ODD_BASE + k, e) for k, e in enumerate(g2.odd) if e]
        if atoms1:
            inv2 = self._ad_inverse(g2.ad)
            moved = []
            for b, eta in atoms1:
                for c, w in inv2[b].items():
                    e = w * eta
                    if e:
                        moved.append((c, e))
            atoms = moved + atoms2
        else:
            atoms = atoms2
        return self._normalize(ad, central, atoms)

    def inverse(self, g: GroupElement) -> GroupElement:
        self._check_same(g, g)
        inv_ad = self._ad_inverse(g.ad)
        central = {
            i: (-a, u.invert_unit(), -b) for i, (a, u, b) in g.central.items()
        }
        atoms = []
        for k in range(N_ODD - 1, -1, -1):
            eta = g.odd[k]
            if not eta:
                continue
            b = ODD_BASE + k
            for c, w in g.ad[b].items():
                e = w * (-eta)
                if e:
                    atoms.append((c, e))
        return self._normalize(inv_ad, central, atoms)

    def equal(self, g1: GroupElement, g2: GroupElement) -> bool:
        self._check_same(g1, g2)
        return g1 == g2

    def ad_full(self, g: GroupElement):
        """The adjoint matrix of g on the full 17-dimensional module, with the
        odd atoms contributing I + eta ad(X)."""
        mat = [dict(col) for col in g.ad]
        for k, eta in enumerate(g.odd):
            if not eta:
                continue
            b = ODD_BASE + k
            atom = self._identity_cols()
            for j, col in self.admat[b].items():
                acc = dict(atom[j])
                for r, c in col.items():
                    w = eta * c
                    if w:
                        acc[r] = acc.get(r, self._zero) + w
                atom[j] = acc
            mat = self._compose(mat, atom)
        return [{i: w for i, w in col.items() if w} for col in mat]

    # --- functoriality ----------------------------------------------------------

    def map_to(self, g: GroupElement, target: "GroupContext") -> GroupElement:
        """Push a point along the algebra map killing the extra Grassmann
        generators; target must be the same family at the same parameter."""
        if (target.kind, target.sigma) != (self.kind, self.sigma):
            raise ValueError("target context is for a different group")
        if target.weil.q > self.weil.q:
            raise ValueError("target Grassmann algebra must not be larger")

        def mv(x):
            return self.weil.restrict(x, target.weil)

        ad = [{i: mv(w) for i, w in col.items()} for col in g.ad]
        central = {
            i: (mv(a), mv(u), mv(b)) for i, (a, u, b) in g.central.items()
        }
        odd = [mv(e) for e in g.odd]
        return GroupElement(target, ad, central, odd)

    # --- random sampling ---------------------------------------------------------

    _COEFF_POOL = (
        Fraction(1),
        Fraction(-1),
        Fraction(2),
        Fraction(1, 2),
        Fraction(-1, 3),
        Fraction(3),
    )

    def rand_even(self, rng: random.Random) -> WeilElement:
        terms = {0: rng.choice(self._COEFF_POOL)}
        for _ in range(2):
            m = rng.choice(self.even_masks)
            if m:
                terms[m] = rng.choice(self._COEFF_POOL)
        return self.weil.element(terms)

    def rand_unit(self, rng: random.Random) -> WeilElement:
        return self.rand_even(rng)

    def rand_nilpotent(self, rng: random.Random) -> WeilElement:
        terms = {}
        nil = [m for m in self.even_masks if m]
        for _ in range(2):
            if nil:
                terms[rng.choice(nil)] = rng.choice(self._COEFF_POOL)
        return self.weil.element(terms)

    def rand_odd(self, rng: random.Random) -> WeilElement:
        terms = {}
        for _ in range(2):
            if self.odd_masks:
                terms[rng.choice(self.odd_masks)] = rng.choice(self._COEFF_POOL)
        return self.weil.element(terms)

    def rand_generator(self, rng: random.Random) -> GroupElement:
        roll = rng.randrange(4)
        if roll == 0:
            return self.unipotent(
                rng.randrange(1, 4), rng.choice((1, -1)), self.rand_even(rng)
            )
        if roll == 1:
            return self.toral(rng.choice(TORAL_KEYS), self.rand_unit(rng))
        if roll == 2:
            return self.toral_nilexp(rng.choice(TORAL_KEYS), self.rand_nilpotent(rng))
        name = rng.choice([B(1), B(2), B(3), TH, MB(1), MB(2), MB(3), MTH])
        return self.odd_gen(name, self.rand_odd(rng))

    def rand_element(self, rng: random.Random, length: int = 3) -> GroupElement:
        g = self.identity()
        for _ in range(length):
            g = self.multiply(g, self.rand_generator(rng))
        return g


def make_context(kind: str, sigma: Sigma, q: int = 4) -> GroupContext:
    return GroupContext(kind, sigma, q)


# --- relation catalog ------------------------------------------------------------


@dataclass
class PresentationReport:
    """Outcome of checking the defining relation catalog of one family."""

    kind: str
    sigma: Sigma
    q: int
    seed: int
    draws: int
    results: List[Tuple[str, str]] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)
    skipped: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> Dict[str, int]:
        out = {"ok": 0, "fail": 0}
        for _, status in self.results:
            out[status] += 1
        out["skip"] = len(self.skipped)
        return out

    def to_json_dict(self) -> Dict:
        return {
            "kind": self.kind,
            "sigma": str(self.sigma),
            "q": self.q,
            "seed": self.seed,
            "draws": self.draws,
            "counts": self.counts(),
            "results": [[name, status] for name, status in self.results],
            "failures": list(self.failures),
            "skipped": [[name, reason] for name, reason in self.skipped],
            "ok": self.ok,
        }


def _relation_catalog(ctx: GroupContext):
    """The defining relations of the family as (name, builder) pairs, with
    printed coefficient data written out explicitly per family, plus a list of
    (name, reason) entries skipped at this parameter."""
    kind = ctx.kind
    s = {i: ctx.sigma[i] for i in (1, 2, 3)}
    tau2 = (s[1] * s[2] * s[3]) ** 2
    one = Fraction(1)

    # conjugation weight of h_{2e_i} / h_th on each root vector
    if kind in ("g", "ghat"):
        def w_hi(i, j_kind, j):
            if j_kind == "b":
                return -s[i] if i == j else s[i]
            if j_kind == "th":
                return s[i]
            return 2 * s[i] if i == j else Fraction(0)
        ucoeff = {i: s[i] for i in (1, 2, 3)}
    else:
        def w_hi(i, j_kind, j):
            if j_kind == "b":
                return Fraction(-1 if i == j else 1)
            if j_kind == "th":
                return one
            return Fraction(2 if i == j else 0)
        if kind in ("gp", "ghatp"):
            ucoeff = {i: one for i in (1, 2, 3)}
        else:
            ucoeff = {i: s[i] for i in (1, 2, 3)}

    def w_th(j_kind, j):
        if j_kind == "b":
            return -s[j]
        if j_kind == "th":
            return Fraction(0)
        return s[j]

    # odd-odd correction scales
    if kind == "g":
        c_bb = {k: one for k in (1, 2, 3)}
        c_diag_h = {i: one for i in (1, 2, 3)}
        c_diag_t = -one
        c_bmth = {i: one for i in (1, 2, 3)}
        c_thmth = one
    elif kind == "gp":
        c_bb = {k: s[k] for k in (1, 2, 3)}
        c_diag_h = {i: s[i] for i in (1, 2, 3)}
        c_diag_t = -one
        c_bmth = {i: s[i] for i in (1, 2, 3)}
        c_thmth = one
    elif kind == "gpp":
        c_bb = {k: one for k in (1, 2, 3)}
        c_diag_h = {i: s[i] for i in (1, 2, 3)}
        c_diag_t = -one
        c_bmth = {i: one for i in (1, 2, 3)}
        c_thmth = one
    elif kind == "ghat":
        c_bb = {k: tau2 for k in (1, 2, 3)}
        c_diag_h = {i: tau2 for i in (1, 2, 3)}
        c_diag_t = -tau2
        c_bmth = {i: tau2 for i in (1, 2, 3)}
        c_thmth = tau2
    else:  # ghatp
        c_bb = {k: tau2 * s[k] for k in (1, 2, 3)}
        c_diag_h = {i: tau2 * s[i] for i in (1, 2, 3)}
        c_diag_t = -tau2
        c_bmth = {i: tau2 * s[i] for i in (1, 2, 3)}
        c_thmth = tau2

    odd_names = [B(1), B(2), B(3), TH, MB(1), MB(2), MB(3), MTH]

    def odd_weight(alpha_i, name):
        """Printed conjugation exponent of h_{2e_i} (alpha_i>0) or h_th on an
        odd one-parameter generator."""
        for j in (1, 2, 3):
            if name == B(j):
                return w_hi(alpha_i, "b", j) if alpha_i else w_th("b", j)
            if name == MB(j):
                return -(w_hi(alpha_i, "b", j) if alpha_i else w_th("b", j))
        if name == TH:
            return w_hi(alpha_i, "th", 0) if alpha_i else w_th("th", 0)
        return -(w_hi(alpha_i, "th", 0) if alpha_i else w_th("th", 0))

    rels: List[Tuple[str, Callable]] = []
    skips: List[Tuple[str, str]] = []

    def add(name, fn):
        rels.append((name, fn))

    # 1. toral conjugation of the odd and even one-parameter subgroups
    for alpha_i in (1, 2, 3, 0):  # 0 stands for th
        alpha = f"2e{alpha_i}" if alpha_i else "th"
        for name in odd_names:
            k = odd_weight(alpha_i, name)

            def conj_odd(rng, alpha=alpha, name=name, k=k):
                u = ctx.rand_unit(rng)
                eta = ctx.rand_odd(rng)
                hh = ctx.toral(alpha, u)
                lhs = hh * ctx.odd_gen(name, eta) * hh.inverse()
                rhs = ctx.odd_gen(name, ctx.upow(u, k) * eta)
                return lhs, rhs

            add(f"h[{alpha}].conj.{name}", conj_odd)

            def conj_odd_nil(rng, alpha=alpha, name=name, k=k):
                n = ctx.rand_nilpotent(rng)
                eta = ctx.rand_odd(rng)
                hh = ctx.toral_nilexp(alpha, n)
                lhs = hh * ctx.odd_gen(name, eta) * hh.inverse()
                rhs = ctx.odd_gen(name, (n * k).exp_nilpotent() * eta)
                return lhs, rhs

            add(f"hexp[{alpha}].conj.{name}", conj_odd_nil)
        for j in (1, 2, 3):
            for sgn, tag in ((1, f"x[2e{j}]"), (-1, f"x[-2e{j}]")):
                k = w_hi(alpha_i, "x", j) if alpha_i else w_th("x", j)
                k = k if sgn > 0 else -k

                def conj_even(rng, alpha=alpha, j=j, sgn=sgn, k=k):
                    u = ctx.rand_unit(rng)
                    a = ctx.rand_even(rng)
                    hh = ctx.toral(alpha, u)
                    lhs = hh * ctx.unipotent(j, sgn, a) * hh.inverse()
                    rhs = ctx.unipotent(j, sgn, ctx.upow(u, k) * a)
                    return lhs, rhs

                add(f"h[{alpha}].conj.{tag}", conj_even)

                def conj_even_nil(rng, alpha=alpha, j=j, sgn=sgn, k=k):
                    n = ctx.rand_nilpotent(rng)
                    a = ctx.rand_even(rng)
                    hh = ctx.toral_nilexp(alpha, n)
                    lhs = hh * ctx.unipotent(j, sgn, a) * hh.inverse()
                    rhs = ctx.unipotent(j, sgn, (n * k).exp_nilpotent() * a)
                    return lhs, rhs

                add(f"hexp[{alpha}].conj.{tag}", conj_even_nil)

    # 2. even unipotents conjugating the odd generators
    unip_targets = []
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            k = third(i, j) if i != j else 0
            unip_targets.append((i, 1, B(j), TH, (one if i == j else Fraction(0))))
            unip_targets.append(
                (i, 1, MB(j), B(k) if k else TH, (Fraction(0) if i == j else one))
            )
            unip_targets.append((i, -1, B(j), MB(k) if k else MTH, (Fraction(0) if i == j else one)))
            unip_targets.append((i, -1, MB(j), MTH, (one if i == j else Fraction(0))))
        unip_targets.append((i, 1, TH, TH, Fraction(0)))
        unip_targets.append((i, 1, MTH, MB(i), one))
        unip_targets.append((i, -1, TH, B(i), one))
        unip_targets.append((i, -1, MTH, MTH, Fraction(0)))
    for i, sgn, src, tgt, base in unip_targets:
        coeff = base * ucoeff[i]
        tag = f"x[{'+' if sgn > 0 else '-'}2e{i}].conj.{src}"

        def conj_by_unip(rng, i=i, sgn=sgn, src=src, tgt=tgt, coeff=coeff):
            a = ctx.rand_even(rng)
            eta = ctx.rand_odd(rng)
            xa = ctx.unipotent(i, sgn, a)
            lhs = xa * ctx.odd_gen(src, eta) * xa.inverse()
            rhs = ctx.odd_gen(src, eta)
            if coeff:
                rhs = rhs * ctx.odd_gen(tgt, coeff * a * eta)
            return lhs, rhs

        add(tag, conj_by_unip)

    # 3. odd-odd reordering with even corrections
    def swap_rel(name1, name2, corr):
        def run(rng):
            e1 = ctx.rand_odd(rng)
            e2 = ctx.rand_odd(rng)
            lhs = ctx.odd_gen(name1, e1) * ctx.odd_gen(name2, e2)
            rhs = ctx.odd_gen(name2, e2) * ctx.odd_gen(name1, e1)
            c = corr(e2 * e1)
            if c is not None:
                rhs = c * rhs
            return lhs, rhs

        return run

    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                continue
            k = third(i, j)
            add(
                f"swap.{B(i)}.{B(j)}",
                swap_rel(B(i), B(j), lambda n, k=k: ctx.unipotent(k, 1, c_bb[k] * n)),
            )
            add(
                f"swap.{MB(i)}.{MB(j)}",
                swap_rel(MB(i), MB(j), lambda n, k=k: ctx.unipotent(k, -1, -c_bb[k] * n)),
            )
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:

                def diag_corr(n, i=i):
                    return ctx.toral_nilexp(f"2e{i}", c_diag_h[i] * n) * ctx.toral_nilexp(
                        "th", c_diag_t * n
                    )

                add(f"swap.{B(i)}.{MB(i)}", swap_rel(B(i), MB(i), diag_corr))
            else:
                add(f"swap.{B(i)}.{MB(j)}", swap_rel(B(i), MB(j), lambda n: None))
        add(f"swap.{B(i)}.{TH}", swap_rel(B(i), TH, lambda n: None))
        add(
            f"swap.{B(i)}.{MTH}",
            swap_rel(B(i), MTH, lambda n, i=i: ctx.unipotent(i, -1, c_bmth[i] * n)),
        )
        add(
            f"swap.{MB(i)}.{TH}",
            swap_rel(MB(i), TH, lambda n, i=i: ctx.unipotent(i, 1, -c_bmth[i] * n)),
        )
        add(f"swap.{MB(i)}.{MTH}", swap_rel(MB(i), MTH, lambda n: None))
    add(
        f"swap.{TH}.{MTH}",
        swap_rel(TH, MTH, lambda n: ctx.toral_nilexp("th", c_thmth * n)),
    )

    # 4. one-parameter group laws
    for name in odd_names:

        def additivity(rng, name=name):
            e1 = ctx.rand_odd(rng)
            e2 = ctx.rand_odd(rng)
            lhs = ctx.odd_gen(name, e1) * ctx.odd_gen(name, e2)
            return lhs, ctx.odd_gen(name, e1 + e2)

        add(f"add.{name}", additivity)
    for i in (1, 2, 3):
        for sgn, tag in ((1, f"x[2e{i}]"), (-1, f"x[-2e{i}]")):

            def additivity_even(rng, i=i, sgn=sgn):
                a1 = ctx.rand_even(rng)
                a2 = ctx.rand_even(rng)
                lhs = ctx.unipotent(i, sgn, a1) * ctx.unipotent(i, sgn, a2)
                return lhs, ctx.unipotent(i, sgn, a1 + a2)

            add(f"add.{tag}", additivity_even)
    for alpha in TORAL_KEYS:

        def toral_mult(rng, alpha=alpha):
            u1 = ctx.rand_unit(rng)
            u2 = ctx.rand_unit(rng)
            lhs = ctx.toral(alpha, u1) * ctx.toral(alpha, u2)
            return lhs, ctx.toral(alpha, u1 * u2)

        add(f"mult.h[{alpha}]", toral_mult)

        def toral_nil_add(rng, alpha=alpha):
            n1 = ctx.rand_nilpotent(rng)
            n2 = ctx.rand_nilpotent(rng)
            lhs = ctx.toral_nilexp(alpha, n1) * ctx.toral_nilexp(alpha, n2)
            return lhs, ctx.toral_nilexp(alpha, n1 + n2)

        add(f"add.hexp[{alpha}]", toral_nil_add)

    # 5. the toral product tying the three factor tori to h_th
    if kind in ("g", "ghat"):
        if ctx.sigma.zero_positions():
            skips.append(
                (
                    "product.h",
                    "h_th carries no central coordinate at a degenerate factor",
                )
            )
        else:

            def h_product(rng):
                u = ctx.rand_unit(rng)
                lhs = ctx.toral("2e1", u) * ctx.toral("2e2", u) * ctx.toral("2e3", u)
                th = ctx.toral("th", u)
                return lhs, th * th

            add("product.h", h_product)

        def h_product_nil(rng):
            n = ctx.rand_nilpotent(rng)
            lhs = (
                ctx.toral_nilexp("2e1", n)
                * ctx.toral_nilexp("2e2", n)
                * ctx.toral_nilexp("2e3", n)
            )
            th = ctx.toral_nilexp("th", n)
            return lhs, th * th

        add("product.hexp", h_product_nil)
    else:

        def h_product(rng):
            u = ctx.rand_unit(rng)
            lhs = ctx.identity()
            for i in (1, 2, 3):
                lhs = lhs * ctx.toral(f"2e{i}", ctx.upow(u, s[i]))
            th = ctx.toral("th", u)
            return lhs, th * th

        add("product.h", h_product)

        def h_product_nil(rng):
            n = ctx.rand_nilpotent(rng)
            lhs = ctx.identity()
            for i in (1, 2, 3):
                lhs = lhs * ctx.toral_nilexp(f"2e{i}", n * s[i])
            th = ctx.toral_nilexp("th", n)
            return lhs, th * th

        add("product.hexp", h_product_nil)

    return rels, skips


def verify_presentation(
    kind: str, sigma: Sigma, q: int = 4, seed: int = 0, draws: int = 2
) -> PresentationReport:
    """Check every catalogued relation of the family on random coefficients."""
    ctx = make_context(kind, sigma, q)
    rels, skips = _relation_catalog(ctx)
    rng = random.Random(seed)
    report = PresentationReport(kind=ctx.kind, sigma=sigma, q=q, seed=seed, draws=draws)
    for name, fn in rels:
        ok = True
        for _ in range(draws):
            lhs, rhs = fn(rng)
            if not ctx.equal(lhs, rhs):
                ok = False
                break
        report.results.append((name, "ok" if ok else "fail"))
        if not ok:
            report.failures.append(name)
    report.skipped.extend(skips)
    return report


# --- engine self-consistency -----------------------------------------------------


@dataclass
class EngineReport:
    """Outcome of the structural self-tests of the group arithmetic."""

    kind: str
    sigma: Sigma
    q: int
    seed: int
    checks: List[Tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(flag for _, flag in self.checks)

    def to_json_dict(self) -> Dict:
        return {
            "kind": self.kind,
            "sigma": str(self.sigma),
            "q": self.q,
            "seed": self.seed,
            "checks": [[name, flag] for name, flag in self.checks],
            "ok": self.ok,
        }


def _mat_equal(m1, m2) -> bool:
    return all(
        {i: w for i, w in c1.items() if w} == {i: w for i, w in c2.items() if w}
        for c1, c2 in zip(m1, m2)
    )


def verify_engine(
    kind: str,
    sigma: Sigma,
    q: int = 4,
    seed: int = 0,
    triples: int = 100,
    pairs: int = 20,
) -> EngineReport:
    """Associativity, inverses, the adjoint homomorphism, body retraction and
    Grassmann functoriality on random elements."""
    ctx = make_context(kind, sigma, q)
    rng = random.Random(seed)
    report = EngineReport(kind=ctx.kind, sigma=sigma, q=q, seed=seed)

    ok = True
    for _ in range(triples):
        g1 = ctx.rand_element(rng)
        g2 = ctx.rand_element(rng)
        g3 = ctx.rand_element(rng)
        if not ctx.equal(ctx.multiply(ctx.multiply(g1, g2), g3),
                         ctx.multiply(g1, ctx.multiply(g2, g3))):
            ok = False
            break
    report.checks.append(("associativity", ok))

    ok = True
    e = ctx.identity()
    for _ in range(max(1, triples // 3)):
        g = ctx.rand_element(rng)
        gi = ctx.inverse(g)
        if not (ctx.equal(ctx.multiply(g, gi), e) and ctx.equal(ctx.multiply(gi, g), e)):
            ok = False
            break
    report.checks.append(("inverse", ok))

    ok = True
    for _ in range(pairs):
        g1 = ctx.rand_element(rng)
        g2 = ctx.rand_element(rng)
        lhs = ctx.ad_full(ctx.multiply(g1, g2))
        rhs = GroupContext._compose(ctx.ad_full(g1), ctx.ad_full(g2))
        if not _mat_equal(lhs, rhs):
            ok = False
            break
    report.checks.append(("adjoint_homomorphism", ok))

    body_ctx = make_context(kind, sigma, 0)
    ok = True
    for _ in range(pairs):
        g1 = ctx.rand_element(rng)
        g2 = ctx.rand_element(rng)
        lhs = ctx.map_to(ctx.multiply(g1, g2), body_ctx)
        rhs = body_ctx.multiply(ctx.map_to(g1, body_ctx), ctx.map_to(g2, body_ctx))
        if not body_ctx.equal(lhs, rhs):
            ok = False
            break
    report.checks.append(("body_retraction", ok))

    if q >= 2:
        small = make_context(kind, sigma, q - 2)
        ok = True
        for _ in range(pairs):
            g1 = ctx.rand_element(rng)
            g2 = ctx.rand_element(rng)
            lhs = ctx.map_to(ctx.multiply(g1, g2), small)
            rhs = small.multiply(ctx.map_to(g1, small), ctx.map_to(g2, small))
            if not small.equal(lhs, rhs):
                ok = False
                break
        report.checks.append(("restriction_functorial", ok))

    return report


# --- singular structure checks ------------------------------------------------------


@dataclass
class GroupStructureReport:
    """Outcome of the structural checks at a degenerate parameter."""

    kind: str
    sigma: Sigma
    q: int
    seed: int
    checks: List[Tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(flag for _, flag in self.checks)

    def to_json_dict(self) -> Dict:
        return {
            "kind": self.kind,
            "sigma": str(self.sigma),
            "q": self.q,
            "seed": self.seed,
            "checks": [[name, flag] for name, flag in self.checks],
            "ok": self.ok,
        }


def _is_identity_col(ctx, col, j) -> bool:
    return col == {j: ctx.weil.one()}


def verify_group_structure(
    kind: str, sigma: Sigma, q: int = 4, seed: int = 0, rounds: int = 50
) -> GroupStructureReport:
    """Degenerate-parameter structure at group level: central factors, normal
    subgroups and abelianness, checked on random points."""
    ctx = make_context(kind, sigma, q)
    zeros = sigma.zero_positions()
    if not zeros:
        raise ValueError("structure checks are for degenerate parameters only")
    rng = random.Random(seed)
    report = GroupStructureReport(kind=ctx.kind, sigma=sigma, q=q, seed=seed)

    if ctx.kind == "g":
        if len(zeros) != 1:
            raise ValueError("the g-family checks expect exactly one vanishing entry")
        i = zeros[0]

        def factor_gen(r):
            roll = r.randrange(3)
            if roll == 0:
                return ctx.unipotent(i, 1, ctx.rand_even(r))
            if roll == 1:
                return ctx.unipotent(i, -1, ctx.rand_even(r))
            return ctx.toral(f"2e{i}", ctx.rand_unit(r))

        ok = True
        for _ in range(rounds):
            z = ctx.rand_element(rng)
            v = factor_gen(rng)
            if not ctx.equal(ctx.multiply(z, v), ctx.multiply(v, z)):
                ok = False
                break
        report.checks.append(("degenerate_factor_central", ok))

        ok = True
        for _ in range(10):
            v1 = factor_gen(rng)
            v2 = factor_gen(rng)
            if not ctx.equal(ctx.multiply(v1, v2), ctx.multiply(v2, v1)):
                ok = False
                break
        report.checks.append(("degenerate_factor_abelian", ok))

    elif ctx.kind == "ghat":
        if len(zeros) != 3:
            raise ValueError("the ghat-family checks expect the zero parameter")
        ok = True
        for _ in range(2 * rounds):
            g1 = ctx.rand_element(rng)
            g2 = ctx.rand_element(rng)
            if not ctx.equal(ctx.multiply(g1, g2), ctx.multiply(g2, g1)):
                ok = False
                break
        report.checks.append(("all_pairs_commute", ok))

    elif ctx.kind == "gp":
        if len(zeros) != 1:
            raise ValueError("the gp-family checks expect exactly one vanishing entry")
        i = zeros[0]
        others = [j for j in (1, 2, 3) if j != i]
        side_even = sorted(sum((list(_block(j)) for j in others), []))
        side_set = set(side_even)
        block_i = list(_block(i))

        def in_side(g):
            for j0 in block_i:
                if not _is_identity_col(ctx, g.ad[j0], j0):
                    return False
            for j0 in side_even:
                if not set(g.ad[j0]) <= side_set:
                    return False
            return True

        def side_gen(r):
            roll = r.randrange(4)
            j = r.choice(others)
            if roll == 0:
                return ctx.unipotent(j, 1, ctx.rand_even(r))
            if roll == 1:
                return ctx.unipotent(j, -1, ctx.rand_even(r))
            if roll == 2:
                return ctx.toral(f"2e{j}", ctx.rand_unit(r))
            name = r.choice([B(1), B(2), B(3), TH, MB(1), MB(2), MB(3), MTH])
            return ctx.odd_gen(name, ctx.rand_odd(r))

        ok = True
        for _ in range(rounds // 2):
            bgen = ctx.multiply(side_gen(rng), side_gen(rng))
            if not in_side(bgen):
                ok = False
                break
            g = ctx.rand_element(rng)
            conj = ctx.multiply(ctx.multiply(g, bgen), ctx.inverse(g))
            if not in_side(conj):
                ok = False
                break
        report.checks.append(("side_subgroup_normal", ok))

        def in_factor(g):
            if any(e for e in g.odd):
                return False
            block_set = set(block_i)
            for j0 in range(N_EVEN):
                if j0 in block_set:
                    if not set(g.ad[j0]) <= block_set:
                        return False
                elif not _is_identity_col(ctx, g.ad[j0], j0):
                    return False
            return True

        def factor_gen(r):
            roll = r.randrange(3)
            if roll == 0:
                return ctx.unipotent(i, 1, ctx.rand_even(r))
            if roll == 1:
                return ctx.unipotent(i, -1, ctx.rand_even(r))
            return ctx.toral(f"2e{i}", ctx.rand_unit(r))

        ok = True
        for _ in range(rounds // 2):
            a = ctx.multiply(factor_gen(rng), factor_gen(rng))
            if not in_factor(a):
                ok = False
                break
        report.checks.append(("complement_factor_closed", ok))

    elif ctx.kind == "gpp":
        if len(zeros) != 1:
            raise ValueError("the gpp-family checks expect exactly one vanishing entry")
        i = zeros[0]
        h0, p0, m0 = _block(i)

        def in_pair(g):
            if any(e for e in g.odd):
                return False
            for j0 in range(DIM):
                if j0 == h0:
                    if not set(g.ad[j0]) <= {h0, p0, m0}:
                        return False
                    if g.ad[j0].get(h0) != ctx.weil.one():
                        return False
                elif not _is_identity_col(ctx, g.ad[j0], j0):
                    return False
            return True

        def pair_elem(r):
            return ctx.multiply(
                ctx.unipotent(i, 1, ctx.rand_even(r)),
                ctx.unipotent(i, -1, ctx.rand_even(r)),
            )

        ok = True
        for _ in range(rounds // 2):
            k1 = pair_elem(rng)
            k2 = pair_elem(rng)
            if not (in_pair(k1) and in_pair(ctx.multiply(k1, k2))):
                ok = False
                break
            if not ctx.equal(ctx.multiply(k1, k2), ctx.multiply(k2, k1)):
                ok = False
                break
        report.checks.append(("root_pair_abelian", ok))

        ok = True
        for _ in range(rounds // 2):
            g = ctx.rand_element(rng)
            conj = ctx.multiply(ctx.multiply(g, pair_elem(rng)), ctx.inverse(g))
            if not in_pair(conj):
                ok = False
                break
        report.checks.append(("root_pair_normal", ok))

    else:  # ghatp
        names = [B(1), B(2), B(3), TH, MB(1), MB(2), MB(3), MTH]
        ok = True
        for n1 in names:
            for n2 in names:
                e1 = ctx.rand_odd(rng)
                e2 = ctx.rand_odd(rng)
                a1 = ctx.odd_gen(n1, e1)
                a2 = ctx.odd_gen(n2, e2)
                if not ctx.equal(ctx.multiply(a1, a2), ctx.multiply(a2, a1)):
                    ok = False
                    break
            if not ok:
                break
        report.checks.append(("odd_generators_commute", ok))

    return report
