"""Parsing and printing of polynomial and rational-function expressions.

Grammar (printing emits the same language, with explicit ``*``)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := base ('^' uint)?
    base   := uint | var | '(' expr ')'
    var    := ('x' | 't') uint

``/`` is accepted by :func:`poly_parse` only when the divisor is a nonzero
constant; :func:`ratfunc_parse` accepts any nonzero divisor.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import MVPoly
from .ratfunc import RatFunc


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}: {text!r}")


_TOKEN = re.compile(r"(\d+)|([xt])(\d+)|([A-Za-z_]\w*)|(\S)")


def _tokenize(text):
    toks = []
    for m in _TOKEN.finditer(text):
        start = m.start()
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("var", (m.group(2), int(m.group(3))), start))
        elif m.group(4):
            toks.append(("name", m.group(4), start))
        else:
            toks.append(("op", m.group(5), start))
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, nx, nt, allow_ratfunc):
        self.text = text
        self.nx = nx
        self.nt = nt
        self.allow_ratfunc = allow_ratfunc
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            w = self.unary()
            if tok[1] == "*":
                v = v * w
                continue
            if w.is_zero():
                self.fail("division by zero", tok)
            if isinstance(w, MVPoly) and w.is_constant():
                v = v * (1 / Fraction(w.constant_value()))
            elif self.allow_ratfunc:
                v = RatFunc.from_poly(v) if isinstance(v, MVPoly) else v
                v = v / w
            else:
                self.fail("division by a non-constant in a polynomial", tok)
        return v

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return -self.unary()
        return self.factor()

    def factor(self):
        v = self.base()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "-":
                self.fail("negative exponent", tok)
            if tok[0] != "int":
                self.fail("expected a non-negative integer exponent", tok)
            self.take()
            v = v ** tok[1]
        return v

    def base(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return MVPoly.const(val, self.nx, self.nt)
        if kind == "var":
            letter, k = val
            limit = self.nx if letter == "x" else self.nt
            if not 1 <= k <= limit:
                self.fail(f"unknown variable {letter}{k}", tok)
            idx = k - 1 if letter == "x" else self.nx + k - 1
            return MVPoly.var(idx, self.nx, self.nt)
        if kind == "name":
            self.fail(f"unknown variable {val}", tok)
        if kind == "op" and val == "(":
            v = self.expr()
            if self.peek()[0] != "op" or self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return v
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {val!r}", tok)


def poly_parse(text: str, nx: int, nt: int = 0) -> MVPoly:
    v = _Parser(text, nx, nt, allow_ratfunc=False).parse()
    return v


def ratfunc_parse(text: str, nx: int, nt: int = 0) -> RatFunc:
    v = _Parser(text, nx, nt, allow_ratfunc=True).parse()
    return RatFunc.from_poly(v) if isinstance(v, MVPoly) else v


# ---------------------------------------------------------------------------
# printing


def _var_name(i, nx):
    return f"x{i + 1}" if i < nx else f"t{i - nx + 1}"


def _monomial(e, nx):
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(_var_name(i, nx))
        elif k > 1:
            parts.append(f"{_var_name(i, nx)}^{k}")
    return "*".join(parts)


def _coeff_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: MVPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, (e, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = _monomial(e, p.nx)
        if not mono:
            body = _coeff_str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_coeff_str(a)}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_ratfunc(f: RatFunc) -> str:
    num = format_poly(f.num)
    if f.is_polynomial():
        return num
    if len(f.num.terms) > 1:
        num = f"({num})"
    den = format_poly(f.den)
    simple = len(f.den.terms) == 1 and sum(next(iter(f.den.terms))) == 1
    return f"{num}/{den}" if simple else f"{num}/({den})"
