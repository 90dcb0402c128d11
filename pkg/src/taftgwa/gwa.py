"""The quantum generalized Weyl algebra k[t](u, v, sigma, h) with sigma(t) = q t.

Elements are kept in the Z-graded normal form sum_k f_k(t) w_k, where
w_k = u^k for k > 0, w_k = v^(-k) for k < 0 and w_0 = 1.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .qpoly import TPoly, _coef_times, _join_signed, ell_invariant, twist
from .scalars import CycloNum, CyclotomicField, format_scalar


class GwaError(ValueError):
    pass


class GwaAlgebra:
    def __init__(self, q: CycloNum, h: TPoly):
        if q.field is not h.field:
            raise GwaError("q and h live in different cyclotomic fields")
        order = q.root_order()
        if order is None:
            raise GwaError(f"q = {q} is not a root of unity")
        if order < 2:
            raise GwaError("q must have order at least 2 (q = 1 is excluded)")
        if h.degree is None or h.degree <= 0:
            raise GwaError(f"h = {h} must be non-constant")
        self.field: CyclotomicField = q.field
        self.q = q
        self.h = h
        self.q_order = order
        self.D = h.degree
        self.ell = ell_invariant(h)
        self._q_powers = [q**k for k in range(order)]
        self._sigma_h: dict[int, TPoly] = {}
        self._mixed: dict[tuple[int, int], tuple[TPoly, int]] = {}

    def __repr__(self) -> str:
        return f"GwaAlgebra(q={self.q}, h={self.h})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GwaAlgebra) and self.q == other.q and self.h == other.h

    def __hash__(self) -> int:
        return hash((self.q, self.h))

    # -- constructors --

    def element(self, components: Mapping[int, TPoly] | None = None) -> GwaElement:
        return GwaElement(self, components or {})

    def zero(self) -> GwaElement:
        return GwaElement(self, {})

    def one(self) -> GwaElement:
        return self.scalar(1)

    def scalar(self, c) -> GwaElement:
        return GwaElement(self, {0: TPoly.const(self.field, c)})

    def poly(self, f: TPoly) -> GwaElement:
        return GwaElement(self, {0: f})

    def monomial(self, a: int = 0, k: int = 0, coef=1) -> GwaElement:
        """coef * t^a * w_k."""
        return GwaElement(self, {k: TPoly.monomial(self.field, a, coef)})

    def t(self) -> GwaElement:
        return self.monomial(1, 0)

    def u(self) -> GwaElement:
        return self.monomial(0, 1)

    def v(self) -> GwaElement:
        return self.monomial(0, -1)

    def generators(self) -> dict[str, GwaElement]:
        return {"t": self.t(), "u": self.u(), "v": self.v()}

    # -- sigma --

    def q_power(self, k: int) -> CycloNum:
        return self._q_powers[k % self.q_order]

    def sigma(self, f: TPoly, k: int = 1) -> TPoly:
        """sigma^k(f) = f(q^k t)."""
        return twist(f, self.q_power(k))

    def sigma_h(self, k: int) -> TPoly:
        k %= self.q_order
        if k not in self._sigma_h:
            self._sigma_h[k] = self.sigma(self.h, k)
        return self._sigma_h[k]

    # -- multiplication --

    def straighten(self, i: int, j: int) -> tuple[TPoly, int]:
        """w_i * w_j = P(t) * w_(i+j); returns (P, i+j).

        u^a v^b = prod_{l=a-c+1}^{a} sigma^l(h) . w_(a-b)
        v^b u^a = prod_{l=b-c}^{b-1} sigma^(-l)(h) . w_(a-b),  c = min(a, b)
        """
        key = (i, j)
        hit = self._mixed.get(key)
        if hit is not None:
            return hit
        one = TPoly.const(self.field, 1)
        if i >= 0 and j >= 0 or i <= 0 and j <= 0:
            res = (one, i + j)
        elif i > 0:
            a, b = i, -j
            c = min(a, b)
            p = one
            for l in range(a - c + 1, a + 1):
                p = p * self.sigma_h(l)
            res = (p, a - b)
        else:
            b, a = -i, j
            c = min(a, b)
            p = one
            for l in range(b - c, b):
                p = p * self.sigma_h(-l)
            res = (p, a - b)
        self._mixed[key] = res
        return res

    def mul(self, e1: GwaElement, e2: GwaElement) -> GwaElement:
        out: dict[int, TPoly] = {}
        for i, f in e1.components.items():
            for j, g in e2.components.items():
                # f w_i g w_j = f sigma^i(g) (w_i w_j)
                factor, k = self.straighten(i, j)
                term = f * self.sigma(g, i) * factor
                acc = out.get(k)
                out[k] = term if acc is None else acc + term
        return GwaElement(self, out)

    # -- independent oracle --

    def word_reduce(self, word: Sequence[str] | str, coef=1) -> GwaElement:
        """Reduce coef * (product of letters) by oriented rewriting.

        Rules: ut -> q tu, vt -> q^-1 tv, uv -> h(qt), vu -> h(t).  The
        result is collected from words of the form t^a u^b or t^a v^b.
        """
        fld = self.field
        q_inv = self.q.inverse()
        h_terms = sorted(self.h.terms.items())
        uv_terms = [(i, c * self.q**i) for i, c in h_terms]
        pending: dict[str, CycloNum] = {}
        word = "".join(word)
        if any(ch not in "tuv" for ch in word):
            raise GwaError(f"word {word!r} is not over the alphabet t, u, v")
        c0 = fld.coerce(coef)
        if c0:
            pending[word] = c0
        done: dict[str, CycloNum] = {}

        def push(w: str, c: CycloNum):
            s = pending.get(w)
            s = c if s is None else s + c
            if s:
                pending[w] = s
            else:
                pending.pop(w, None)

        while pending:
            w, c = pending.popitem()
            pos = -1
            for idx in range(len(w) - 1):
                pair = w[idx : idx + 2]
                if pair in ("ut", "vt", "uv", "vu"):
                    pos = idx
                    break
            if pos < 0:
                s = done.get(w)
                s = c if s is None else s + c
                if s:
                    done[w] = s
                else:
                    done.pop(w, None)
                continue
            head, pair, tail = w[:pos], w[pos : pos + 2], w[pos + 2 :]
            if pair == "ut":
                push(head + "tu" + tail, c * self.q)
            elif pair == "vt":
                push(head + "tv" + tail, c * q_inv)
            else:
                for i, hc in uv_terms if pair == "uv" else h_terms:
                    push(head + "t" * i + tail, c * hc)

        out: dict[int, dict[int, CycloNum]] = {}
        for w, c in done.items():
            a = len(w) - len(w.lstrip("t"))
            rest = w[a:]
            if not rest:
                k = 0
            elif rest == "u" * len(rest):
                k = len(rest)
            elif rest == "v" * len(rest):
                k = -len(rest)
            else:
                raise AssertionError(f"irreducible word {w!r} is not in normal form")
            slot = out.setdefault(k, {})
            slot[a] = slot.get(a, fld.zero) + c
        return GwaElement(self, {k: TPoly(fld, terms) for k, terms in out.items()})


class GwaElement:
    """Finite sum of f_k(t) w_k; immutable."""

    __slots__ = ("algebra", "components", "_hash")

    def __init__(self, algebra: GwaAlgebra, components: Mapping[int, TPoly]):
        self.algebra = algebra
        self.components = {k: f for k, f in components.items() if f}
        self._hash = None

    @property
    def field(self) -> CyclotomicField:
        return self.algebra.field

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def grades(self) -> list[int]:
        return sorted(self.components)

    def component(self, k: int) -> TPoly:
        return self.components.get(k, TPoly.zero(self.field))

    def terms(self) -> Iterable[tuple[int, int, CycloNum]]:
        """(grade, t-exponent, coefficient) triples in canonical order."""
        for k in sorted(self.components):
            for a, c in sorted(self.components[k].terms.items(), reverse=True):
                yield k, a, c

    def t_degree(self) -> int | None:
        degs = [f.degree for f in self.components.values()]
        return max(degs) if degs else None

    def __eq__(self, other) -> bool:
        if isinstance(other, GwaElement):
            return self.components == other.components
        if isinstance(other, (int, CycloNum)):
            return self == self.algebra.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.components.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"GwaElement({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)

    def _lift(self, other) -> GwaElement | None:
        if isinstance(other, GwaElement):
            return other
        if isinstance(other, TPoly):
            return self.algebra.poly(other)
        try:
            return self.algebra.scalar(self.field.coerce(other))
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.components)
        for k, f in o.components.items():
            out[k] = out[k] + f if k in out else f
        return GwaElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> GwaElement:
        return GwaElement(self.algebra, {k: -f for k, f in self.components.items()})

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
        if isinstance(other, GwaElement):
            return self.algebra.mul(self, other)
        if isinstance(other, TPoly):
            return self.algebra.mul(self, self.algebra.poly(other))
        try:
            c = self.field.coerce(other)
        except TypeError:
            return NotImplemented
        return GwaElement(self.algebra, {k: f * c for k, f in self.components.items()})

    def __rmul__(self, other):
        if isinstance(other, TPoly):
            return self.algebra.mul(self.algebra.poly(other), self)
        return self.__mul__(other)

    def __pow__(self, k: int) -> GwaElement:
        if k < 0:
            raise ValueError("negative power of an algebra element")
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out


def grade_component(e: GwaElement, k: int) -> TPoly:
    return e.component(k)


def gwa_mul(A: GwaAlgebra, e1: GwaElement, e2: GwaElement) -> GwaElement:
    return A.mul(e1, e2)


def word_reduce(A: GwaAlgebra, word: Sequence[str] | str, coef=1) -> GwaElement:
    return A.word_reduce(word, coef)


def monomial_word(a: int, k: int) -> str:
    """Letter string of t^a w_k."""
    letters = "t" * a
    if k > 0:
        letters += "u" * k
    elif k < 0:
        letters += "v" * (-k)
    return letters


def _monomial_text(a: int, k: int) -> str:
    parts = []
    if a:
        parts.append("t" if a == 1 else f"t^{a}")
    if k:
        letter = "u" if k > 0 else "v"
        parts.append(letter if abs(k) == 1 else f"{letter}^{abs(k)}")
    return "*".join(parts)


def format_element(e: GwaElement) -> str:
    """Canonical literal, e.g. ``3/2*t^2*u + z*v^3``."""
    pieces = [_coef_times(format_scalar(c), _monomial_text(a, k)) for k, a, c in e.terms()]
    return _join_signed(pieces) if pieces else "0"
