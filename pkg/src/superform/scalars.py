"""Exact arithmetic in R = QQ[x1,x2,x3]/(x1+x2+x3) and rational parameter triples.

The quotient relation is linear, so x3 is eliminated at storage time
(x3 = -x1-x2) and elements are honest polynomials in x1, x2 with rational
coefficients.  That makes the canonical form trivial: a term dict with no zero
coefficients.  Specialization at a rational triple is a ring homomorphism
R -> QQ.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Tuple

Rat = Fraction
ExpPair = Tuple[int, int]


def as_fraction(value) -> Fraction:
    """Coerce ints/strings/Fractions to Fraction, rejecting floats (exactness)."""
    if isinstance(value, float):
        raise TypeError("floating-point scalars are not allowed; use Fraction")
    return Fraction(value)


class Sigma:
    """A rational parameter triple (s1, s2, s3).

    ``in_V`` means the triple lies on the plane s1+s2+s3 = 0; ``in_V_times``
    additionally requires every coordinate to be nonzero.  Triples off the
    plane are deliberately allowed: the realization-by-formula construction
    uses them to exhibit Jacobi failures.
    """

    __slots__ = ("s1", "s2", "s3")

    def __init__(self, s1, s2, s3):
        object.__setattr__(self, "s1", as_fraction(s1))
        object.__setattr__(self, "s2", as_fraction(s2))
        object.__setattr__(self, "s3", as_fraction(s3))

    def __setattr__(self, name, value):
        raise AttributeError("Sigma is immutable")

    @property
    def in_V(self) -> bool:
        return self.s1 + self.s2 + self.s3 == 0

    @property
    def in_V_times(self) -> bool:
        return self.in_V and self.s1 != 0 and self.s2 != 0 and self.s3 != 0

    @property
    def is_integral(self) -> bool:
        return all(s.denominator == 1 for s in self)

    def zero_positions(self) -> tuple:
        """1-based indices i with s_i = 0."""
        return tuple(i for i, s in enumerate(self, start=1) if s == 0)

    def __iter__(self):
        return iter((self.s1, self.s2, self.s3))

    def __getitem__(self, i: int) -> Fraction:
        """1-based coordinate access (matching the index conventions of the tables)."""
        return (self.s1, self.s2, self.s3)[i - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sigma):
            return NotImplemented
        return tuple(self) == tuple(other)

    def __hash__(self):
        return hash(tuple(self))

    def __repr__(self):
        return f"Sigma({self.s1}, {self.s2}, {self.s3})"

    def __str__(self):
        return ",".join(str(s) for s in self)

    @staticmethod
    def parse(text: str) -> "Sigma":
        """Parse 'a/b,c/d,e/f' (rationals, ints allowed)."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated rationals, got {text!r}")
        try:
            return Sigma(*(Fraction(p) for p in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational in sigma {text!r}: {exc}") from None


class PolyScalar:
    """An element of QQ[x1,x2,x3]/(x1+x2+x3), stored in terms of x1, x2 only.

    ``terms`` maps exponent pairs (e1, e2) to nonzero rational coefficients.
    Instances are immutable and usable as dict keys.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ExpPair, Fraction] | None = None):
        clean = {}
        if terms:
            for (e1, e2), c in terms.items():
                c = as_fraction(c)
                if c:
                    clean[(int(e1), int(e2))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PolyScalar is immutable")

    # --- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "PolyScalar":
        return PolyScalar()

    @staticmethod
    def one() -> "PolyScalar":
        return PolyScalar({(0, 0): Fraction(1)})

    @staticmethod
    def const(c) -> "PolyScalar":
        return PolyScalar({(0, 0): as_fraction(c)})

    @staticmethod
    def gen(i: int) -> "PolyScalar":
        """The generator x_i (1-based).  x3 is stored as -x1-x2."""
        if i == 1:
            return PolyScalar({(1, 0): Fraction(1)})
        if i == 2:
            return PolyScalar({(0, 1): Fraction(1)})
        if i == 3:
            return PolyScalar({(1, 0): Fraction(-1), (0, 1): Fraction(-1)})
        raise ValueError(f"generator index must be 1, 2 or 3, got {i}")

    # --- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PolyScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyScalar.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return PolyScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyScalar({k: -c for k, c in self.terms.items()})

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
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for (a1, a2), ca in self.terms.items():
            for (b1, b2), cb in other.terms.items():
                k = (a1 + b1, a2 + b2)
                s = out.get(k, Fraction(0)) + ca * cb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return PolyScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the polynomial ring")
        out = PolyScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyScalar.const(other)
        if not isinstance(other, PolyScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # --- specialization -----------------------------------------------

    def specialize(self, s: Sigma) -> Fraction:
        """Evaluate at x1 = s1, x2 = s2 (and hence x3 = -s1-s2).

        This is a ring homomorphism for every rational triple; it agrees with
        substituting all three coordinates exactly when s lies on the plane.
        """
        total = Fraction(0)
        for (e1, e2), c in self.terms.items():
            total += c * s.s1**e1 * s.s2**e2
        return total

    # --- serialization -------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        def key(item):
            (e1, e2), _ = item
            return (-(e1 + e2), -e1, -e2)
        chunks = []
        for (e1, e2), c in sorted(self.terms.items(), key=key):
            factors = []
            for name, e in (("x1", e1), ("x2", e2)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = c if c > 0 else -c
            if factors:
                body = f"{mag}*" + "*".join(factors)
            else:
                body = f"{mag}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"PolyScalar({self})"

    _TERM_RE = re.compile(r"^\s*([+-]?[^+-]*(?:\^\s*\d+)?)")

    @staticmethod
    def parse(text: str) -> "PolyScalar":
        """Parse the string form; accepts x3, which is eliminated on the spot."""
        text = text.strip()
        if not text or text == "0":
            return PolyScalar.zero()
        # split into signed terms at top level (no parentheses in this format)
        terms = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
        result = PolyScalar.zero()
        for raw in terms:
            if not raw:
                continue
            sign = Fraction(1)
            body = raw
            if body[0] == "+":
                body = body[1:]
            elif body[0] == "-":
                sign = Fraction(-1)
                body = body[1:]
            coeff = Fraction(1)
            mono = PolyScalar.one()
            for factor in body.split("*"):
                if not factor:
                    raise ValueError(f"empty factor in term {raw!r}")
                m = re.fullmatch(r"x([123])(?:\^(\d+))?", factor)
                if m:
                    idx = int(m.group(1))
                    exp = int(m.group(2) or 1)
                    mono = mono * PolyScalar.gen(idx) ** exp
                else:
                    try:
                        coeff *= Fraction(factor)
                    except ValueError:
                        raise ValueError(f"bad factor {factor!r} in {text!r}") from None
            result = result + mono * (sign * coeff)
        return result


def sigma_scalars(s: Sigma | None) -> tuple:
    """The three coordinate scalars in the working ring.

    Symbolic context (s is None): the generators x1, x2, x3 of R.
    Specialized context: the rational coordinates themselves.
    """
    if s is None:
        return (PolyScalar.gen(1), PolyScalar.gen(2), PolyScalar.gen(3))
    return (s.s1, s.s2, s.s3)
