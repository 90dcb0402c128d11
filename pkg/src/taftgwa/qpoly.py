"""Sparse polynomials in t over a cyclotomic field, and the gamma-calculus on them."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .scalars import CycloNum, CyclotomicField, format_scalar


class TPoly:
    """Immutable sparse polynomial: exponent -> nonzero coefficient."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, fld: CyclotomicField, terms: Mapping[int, object] | None = None):
        self.field = fld
        clean: dict[int, CycloNum] = {}
        if terms:
            for e, c in terms.items():
                if e < 0:
                    raise ValueError(f"negative exponent {e} in polynomial in t")
                c = fld.coerce(c)
                if c:
                    clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, fld: CyclotomicField, terms: dict[int, CycloNum]) -> TPoly:
        p = cls.__new__(cls)
        p.field = fld
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, fld: CyclotomicField) -> TPoly:
        return cls._raw(fld, {})

    @classmethod
    def const(cls, fld: CyclotomicField, c) -> TPoly:
        return cls(fld, {0: c})

    @classmethod
    def monomial(cls, fld: CyclotomicField, exp: int, coef=1) -> TPoly:
        return cls(fld, {exp: coef})

    @classmethod
    def from_pairs(cls, fld: CyclotomicField, pairs: Iterable[tuple[int, object]]) -> TPoly:
        acc: dict[int, CycloNum] = {}
        for e, c in pairs:
            acc[e] = acc.get(e, fld.zero) + fld.coerce(c)
        return cls(fld, acc)

    # -- inspection --

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return max(self.terms) if self.terms else None

    def support(self) -> list[int]:
        return sorted(self.terms)

    def coeff(self, e: int) -> CycloNum:
        return self.terms.get(e, self.field.zero)

    def leading(self) -> CycloNum:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[max(self.terms)]

    def items(self):
        return sorted(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.terms == other.terms
        if isinstance(other, (int, CycloNum)):
            return self.terms == TPoly.const(self.field, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"TPoly({format_tpoly(self)!r})"

    def __str__(self) -> str:
        return format_tpoly(self)

    # -- ring operations --

    def _lift(self, other) -> TPoly | None:
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            return TPoly.const(self.field, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return TPoly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self) -> TPoly:
        return TPoly._raw(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, TPoly):
            out: dict[int, CycloNum] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    p = c1 * c2
                    s = out.get(e)
                    out[e] = p if s is None else s + p
            return TPoly._raw(self.field, {e: c for e, c in out.items() if c})
        if isinstance(other, (int, Fraction, CycloNum)):
            c = self.field.coerce(other)
            if not c:
                return TPoly.zero(self.field)
            return TPoly._raw(self.field, {e: a * c for e, a in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = TPoly.const(self.field, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift_up(self, k: int) -> TPoly:
        """Multiply by t^k."""
        return TPoly._raw(self.field, {e + k: c for e, c in self.terms.items()})

    def __call__(self, x):
        """Evaluate at a scalar (Horner over the sparse support)."""
        x = self.field.coerce(x)
        total = self.field.zero
        for e, c in self.terms.items():
            total = total + c * x**e
        return total

    def inflate(self, n: int) -> TPoly:
        """Substitute t -> t^n."""
        return TPoly._raw(self.field, {e * n: c for e, c in self.terms.items()})

    def deflate(self, n: int) -> TPoly:
        """Inverse of inflate; raises ValueError unless every exponent is divisible by n."""
        bad = [e for e in self.terms if e % n]
        if bad:
            raise ValueError(f"exponents {sorted(bad)} are not multiples of {n}")
        return TPoly._raw(self.field, {e // n: c for e, c in self.terms.items()})


# -- the gamma-calculus ------------------------------------------------------


def gamma_number(k: int, gamma: CycloNum) -> CycloNum:
    """[k]_gamma = 1 + gamma + ... + gamma^(k-1).

    Negative k uses (1 - gamma^k)/(1 - gamma) (and k itself when gamma = 1).
    """
    fld = gamma.field
    if k >= 0:
        total = fld.zero
        p = fld.one
        for _ in range(k):
            total = total + p
            p = p * gamma
        return total
    if gamma == 1:
        return fld.from_rational(k)
    return (1 - gamma**k) / (1 - gamma)


def gamma_derivative(f: TPoly, gamma: CycloNum) -> TPoly:
    """delta_gamma(t^k) = [k]_gamma t^(k-1); the ordinary derivative when gamma = 1."""
    out = {}
    for e, c in f.terms.items():
        if e:
            out[e - 1] = c * gamma_number(e, gamma)
    return TPoly(f.field, out)


def twist(f: TPoly, c: CycloNum) -> TPoly:
    """f(c t)."""
    if c == 1:
        return f
    return TPoly._raw(f.field, {e: a * c**e for e, a in f.terms.items()})


def shift_trunc(f: TPoly, k: int) -> TPoly:
    """f^(k) = sum_i f_(i+k) t^i."""
    return TPoly._raw(f.field, {e - k: c for e, c in f.terms.items() if e >= k})


def support_class(f: TPoly, m: int) -> int | None:
    """Common residue of supp(f) mod m, or None if the support spans several classes."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no support")
    residues = {e % m for e in f.terms}
    return residues.pop() if len(residues) == 1 else None


def ell_invariant(h: TPoly) -> int:
    """gcd of the pairwise support differences of h; 0 when h is a monomial."""
    if h.is_zero():
        raise ValueError("ell-invariant of the zero polynomial")
    supp = h.support()
    g = 0
    for e in supp[1:]:
        g = gcd(g, e - supp[0])
    return g


def format_tpoly(f: TPoly, var: str = "t") -> str:
    """Canonical literal, decreasing degree: ``(1 + z)*t^2 - 3*t + 1/2``."""
    if not f.terms:
        return "0"
    pieces: list[str] = []
    for e, c in sorted(f.terms.items(), reverse=True):
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        pieces.append(_coef_times(format_scalar(c), mono))
    return _join_signed(pieces)


def _coef_times(coef: str, mono: str) -> str:
    """Attach a scalar literal to a monomial word, parenthesizing sums."""
    if not mono:
        return coef
    if coef == "1":
        return mono
    if coef == "-1":
        return "-" + mono
    compound = " + " in coef or " - " in coef
    if compound:
        return f"({coef})*{mono}"
    return f"{coef}*{mono}"


def _join_signed(pieces: list[str]) -> str:
    out = pieces[0]
    for p in pieces[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out
