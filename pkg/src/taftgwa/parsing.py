"""Text syntax for scalars, polynomials in t and algebra elements.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'|'/'] factor)*        (juxtaposition also multiplies)
    factor := atom ['^' ['-'] int]
    atom   := int | 'z' ['[' int ']'] | 't' | 'u' | 'v' | '(' expr ')'

``z`` is the generating root of unity of the ambient field and ``z[M]`` a
primitive M-th root of unity in it.  Sums of words in t, u, v are reduced to
normal form by the rewriting rules of the algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gwa import GwaAlgebra, GwaElement
from .qpoly import TPoly
from .scalars import CycloNum, CyclotomicField


class ParseError(ValueError):
    def __init__(self, message: str, src: str, pos: int):
        self.src = src
        self.pos = pos
        self.line = src.count("\n", 0, pos) + 1
        self.column = pos - (src.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([tuvz])|(\^|\*|/|\+|-|\(|\)|\[|\]))")

LETTERS = "tuv"


@dataclass
class _Tok:
    kind: str   # "int", "name", "op", "end"
    text: str
    pos: int


def _tokenize(src: str) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            bad = pos + (len(src[pos:]) - len(src[pos:].lstrip()))
            raise ParseError(f"unexpected character {src[bad]!r}", src, bad)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(_Tok("int", m.group(1), start))
        elif m.group(2):
            out.append(_Tok("name", m.group(2), start))
        else:
            out.append(_Tok("op", m.group(3), start))
        pos = m.end()
    out.append(_Tok("end", "", len(src)))
    return out


# A parsed value is a noncommutative polynomial: word over t, u, v -> coefficient.
WordSum = dict


class _Parser:
    def __init__(self, src: str, fld: CyclotomicField, letters: str):
        self.src = src
        self.fld = fld
        self.letters = letters
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.src, tok.pos)

    def expect(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            self.error(f"expected {text!r}, found {tok.text or 'end of input'!r}")
        return self.take()

    def parse(self) -> WordSum:
        if self.peek().kind == "end":
            self.error("empty expression")
        val = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return val

    # -- grammar --

    def expr(self) -> WordSum:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            sign = -1 if tok.text == "-" else 1
        total = _scale(self.term(), sign, self.fld)
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            total = _add(total, _scale(rhs, -1 if op == "-" else 1, self.fld))
        return total

    def _starts_factor(self, tok: _Tok) -> bool:
        return tok.kind in ("int", "name") or (tok.kind == "op" and tok.text == "(")

    def term(self) -> WordSum:
        val = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                val = _mul(val, self.factor(), self.fld)
            elif tok.kind == "op" and tok.text == "/":
                self.take()
                at = self.peek()
                den = self.factor()
                c = _as_scalar(den, self.fld)
                if c is None:
                    self.error("can only divide by a scalar", at)
                if c.is_zero():
                    self.error("division by zero", at)
                val = _scale(val, c.inverse(), self.fld)
            elif self._starts_factor(tok):
                val = _mul(val, self.factor(), self.fld)
            else:
                return val

    def factor(self) -> WordSum:
        start = self.peek()
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            neg = False
            if self.peek().kind == "op" and self.peek().text == "-":
                self.take()
                neg = True
            tok = self.peek()
            if tok.kind != "int":
                self.error("expected an integer exponent")
            self.take()
            k = int(tok.text)
            if neg:
                c = _as_scalar(base, self.fld)
                if c is None:
                    self.error("negative exponents are allowed only on scalars", start)
                if c.is_zero():
                    self.error("zero has no negative powers", start)
                return {"": c ** (-k)}
            return _power(base, k, self.fld)
        return base

    def atom(self) -> WordSum:
        tok = self.take()
        if tok.kind == "int":
            return {"": self.fld.from_rational(int(tok.text))}
        if tok.kind == "name":
            if tok.text == "z":
                if self.peek().kind == "op" and self.peek().text == "[":
                    self.take()
                    mt = self.peek()
                    if mt.kind != "int":
                        self.error("expected the order M in z[M]")
                    self.take()
                    self.expect("]")
                    M = int(mt.text)
                    if M < 1 or self.fld.N % M:
                        self.error(f"z[{M}] is not in the ambient field Q(zeta_{self.fld.N})", mt)
                    return {"": self.fld.zeta(self.fld.N // M)}
                return {"": self.fld.zeta(1)}
            if tok.text not in self.letters:
                self.error(f"variable {tok.text!r} is not allowed here", tok)
            return {tok.text: self.fld.one}
        if tok.kind == "op" and tok.text == "(":
            val = self.expr()
            self.expect(")")
            return val
        self.error(f"unexpected {tok.text or 'end of input'!r}", tok)


def _add(a: WordSum, b: WordSum) -> WordSum:
    out = dict(a)
    for w, c in b.items():
        s = out.get(w)
        s = c if s is None else s + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


def _scale(a: WordSum, c, fld: CyclotomicField) -> WordSum:
    c = fld.coerce(c)
    if not c:
        return {}
    return {w: x * c for w, x in a.items()}


def _mul(a: WordSum, b: WordSum, fld: CyclotomicField) -> WordSum:
    out: WordSum = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            out = _add(out, {w1 + w2: c1 * c2})
    return out


def _power(a: WordSum, k: int, fld: CyclotomicField) -> WordSum:
    out: WordSum = {"": fld.one}
    for _ in range(k):
        out = _mul(out, a, fld)
    return out


def _as_scalar(a: WordSum, fld: CyclotomicField) -> CycloNum | None:
    """The scalar value of a, or None if a involves t, u or v."""
    if not a:
        return fld.zero
    if set(a) != {""}:
        return None
    return a[""]


def parse_scalar(src: str, fld: CyclotomicField) -> CycloNum:
    val = _Parser(src, fld, "").parse()
    return val.get("", fld.zero)


def parse_tpoly(src: str, fld: CyclotomicField) -> TPoly:
    val = _Parser(src, fld, "t").parse()
    return TPoly.from_pairs(fld, ((len(w), c) for w, c in val.items()))


def parse_words(src: str, fld: CyclotomicField) -> WordSum:
    return _Parser(src, fld, LETTERS).parse()


def parse_element(src: str, A: GwaAlgebra) -> GwaElement:
    """Parse and reduce to normal form with the rewriting rules (not the product formulas)."""
    total = A.zero()
    for w, c in parse_words(src, A.field).items():
        total = total + A.word_reduce(w, c)
    return total


def literal_orders(src: str) -> list[int]:
    """The M of every z[M] in a literal; used to size the ambient field before parsing."""
    return [int(m) for m in re.findall(r"z\s*\[\s*(\d+)\s*\]", src)]
