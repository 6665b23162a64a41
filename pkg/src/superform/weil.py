"""Finite-dimensional Grassmann algebras over QQ.

WeilAlgebra(q) is the exterior algebra on q anticommuting generators.  Basis
monomials are encoded as integer bitmasks (bit i-1 set means generator i is a
factor, indices written in increasing order), so the algebra has dimension
2^q and all products reduce to a sign times another basis monomial.

Every element decomposes as body + nilpart with the body the coefficient of 1;
an element is invertible exactly when its body is nonzero, and exponentials of
body-free elements are finite sums.  These two facts power all the group-level
computations downstream.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable

from .scalars import as_fraction


def _mul_sign(a: int, b: int) -> int:
    """Sign of (increasing monomial a) * (increasing monomial b), masks disjoint.

    Each generator in b must move left past the generators of a that have a
    larger index; every such pass contributes one transposition.
    """
    total = 0
    bb = b
    while bb:
        j = (bb & -bb).bit_length() - 1
        total += (a >> (j + 1)).bit_count()
        bb &= bb - 1
    return -1 if total & 1 else 1


class WeilAlgebra:
    """The Grassmann algebra on q generators over QQ."""

    __slots__ = ("q",)

    def __init__(self, q: int):
        if q < 0:
            raise ValueError("number of generators must be nonnegative")
        self.q = q

    @property
    def dim(self) -> int:
        return 1 << self.q

    def zero(self) -> "WeilElement":
        return WeilElement(self, {})

    def one(self) -> "WeilElement":
        return WeilElement(self, {0: Fraction(1)})

    def const(self, c) -> "WeilElement":
        return WeilElement(self, {0: as_fraction(c)})

    def gen(self, i: int) -> "WeilElement":
        """Generator number i (1-based)."""
        if not 1 <= i <= self.q:
            raise ValueError(f"generator index {i} out of range 1..{self.q}")
        return WeilElement(self, {1 << (i - 1): Fraction(1)})

    def gens(self) -> list:
        return [self.gen(i) for i in range(1, self.q + 1)]

    def monomial(self, indices: Iterable[int], coeff=1) -> "WeilElement":
        """Basis monomial for a set of generator indices (1-based, distinct)."""
        mask = 0
        for i in indices:
            bit = 1 << (i - 1)
            if not 1 <= i <= self.q:
                raise ValueError(f"generator index {i} out of range 1..{self.q}")
            if mask & bit:
                raise ValueError(f"repeated generator index {i}")
            mask |= bit
        return WeilElement(self, {mask: as_fraction(coeff)})

    def element(self, terms: Dict[int, Fraction]) -> "WeilElement":
        return WeilElement(self, terms)

    def __eq__(self, other):
        return isinstance(other, WeilAlgebra) and self.q == other.q

    def __hash__(self):
        return hash(("WeilAlgebra", self.q))

    def __repr__(self):
        return f"WeilAlgebra(q={self.q})"

    def restrict(self, x: "WeilElement", target: "WeilAlgebra") -> "WeilElement":
        """The algebra map onto a smaller Grassmann algebra killing the extra
        generators: terms touching any generator above target.q are dropped."""
        if target.q > self.q:
            raise ValueError("target algebra must not have more generators")
        keep = (1 << target.q) - 1
        return WeilElement(
            target, {m: c for m, c in x.terms.items() if m & ~keep == 0}
        )

    @staticmethod
    def parse(text: str) -> "WeilElement":
        """Parse the string form, e.g. 'q=4: 1 + 2*x[1,2] - 1/3*x[1,2,3,4]'."""
        m = re.match(r"^\s*q\s*=\s*(\d+)\s*:\s*(.*)$", text)
        if not m:
            raise ValueError(f"missing 'q=<n>:' prefix in {text!r}")
        alg = WeilAlgebra(int(m.group(1)))
        body = m.group(2).strip()
        if not body or body == "0":
            return alg.zero()
        out = alg.zero()
        for raw in re.findall(r"[+-]?[^+-]+", body.replace(" ", "")):
            if not raw:
                continue
            sign = Fraction(1)
            if raw[0] == "+":
                raw = raw[1:]
            elif raw[0] == "-":
                sign = Fraction(-1)
                raw = raw[1:]
            mt = re.fullmatch(r"(?:([0-9/]+)\*)?x\[([0-9,]+)\]", raw)
            if mt:
                coeff = Fraction(mt.group(1)) if mt.group(1) else Fraction(1)
                idx = [int(s) for s in mt.group(2).split(",")]
                out = out + alg.monomial(idx, sign * coeff)
            else:
                out = out + alg.const(sign * Fraction(raw))
        return out


class WeilElement:
    """An element of a WeilAlgebra: sparse dict mask -> nonzero Fraction."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: WeilAlgebra, terms: Dict[int, Fraction]):
        clean = {}
        for m, c in terms.items():
            c = as_fraction(c)
            if c:
                clean[int(m)] = c
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeilElement is immutable")

    # --- structure queries ---------------------------------------------

    @property
    def body(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def nilpart(self) -> "WeilElement":
        return WeilElement(self.alg, {m: c for m, c in self.terms.items() if m})

    def parity(self):
        """0 if purely even, 1 if purely odd, None if mixed (or for 0: 0)."""
        seen = {m.bit_count() & 1 for m in self.terms}
        if not seen:
            return 0
        if len(seen) == 1:
            return seen.pop()
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def min_degree(self) -> int:
        """Smallest monomial degree present (0 for the zero element)."""
        if not self.terms:
            return 0
        return min(m.bit_count() for m in self.terms)

    def __bool__(self):
        return bool(self.terms)

    # --- arithmetic ------------------------------------------------------

    def _check(self, other: "WeilElement"):
        if self.alg.q != other.alg.q:
            raise ValueError("elements live in Grassmann algebras of different size")

    def _coerce(self, other):
        if isinstance(other, WeilElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.alg.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return WeilElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return WeilElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            return WeilElement(self.alg, {m: v * c for m, v in self.terms.items()})
        if not isinstance(other, WeilElement):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma & mb:
                    continue
                m = ma | mb
                s = out.get(m, Fraction(0)) + ca * cb * _mul_sign(ma, mb)
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return WeilElement(self.alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use invert_unit for inverses")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.alg.const(other)
        if not isinstance(other, WeilElement):
            return NotImplemented
        return self.alg.q == other.alg.q and self.terms == other.terms

    def __hash__(self):
        return hash((self.alg.q, frozenset(self.terms.items())))

    # --- unit inversion and exponentials ---------------------------------

    def invert_unit(self) -> "WeilElement":
        """Inverse of an element with nonzero body.

        (b + n)^-1 = b^-1 * sum_k (-n/b)^k; the series stops because the
        nilpotent part dies after at most q factors.
        """
        b = self.body
        if b == 0:
            raise ValueError("element has zero body; not invertible")
        n = self.nilpart() * (Fraction(-1) / b)
        out = self.alg.one()
        term = self.alg.one()
        while True:
            term = term * n
            if term.is_zero():
                break
            out = out + term
        return out * (Fraction(1) / b)

    def exp_nilpotent(self) -> "WeilElement":
        """exp of a body-free element; the sum is finite."""
        if self.body != 0:
            raise ValueError("exp requires zero body")
        out = self.alg.one()
        term = self.alg.one()
        k = 0
        while True:
            k += 1
            term = term * self * Fraction(1, k)
            if term.is_zero():
                break
            out = out + term
        return out

    # --- serialization ----------------------------------------------------

    def __str__(self):
        prefix = f"q={self.alg.q}: "
        if not self.terms:
            return prefix + "0"
        def key(item):
            m, _ = item
            return (m.bit_count(), m)
        chunks = []
        for m, c in sorted(self.terms.items(), key=key):
            mag = c if c > 0 else -c
            if m == 0:
                body = f"{mag}"
            else:
                idx = [i + 1 for i in range(self.alg.q) if m >> i & 1]
                body = f"{mag}*x[{','.join(map(str, idx))}]"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return prefix + " ".join(chunks)

    def __repr__(self):
        return f"WeilElement({self})"
