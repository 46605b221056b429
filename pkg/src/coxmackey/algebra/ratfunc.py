"""Rational functions in canonical form.

A ``RatFunc`` is ``num/den`` with ``gcd(num, den) = 1`` and ``den`` an integer
polynomial that is primitive and has positive grlex leading coefficient.  All
scalars live in ``num``.  Two equal fractions therefore have identical
``(num, den)`` pairs.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MVPoly, as_coeff, poly_gcd


def _is_one(p: MVPoly):
    return len(p.terms) == 1 and p.is_constant() and p.constant_value() == 1


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: MVPoly, den: MVPoly | None = None, *, reduced=False):
        if den is None:
            den = MVPoly.one(num.nx, num.nt)
        num, den = num._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._hash = None
        if num.is_zero():
            self.num = num
            self.den = MVPoly.one(num.nx, num.nt)
            return
        if not reduced and not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num.divexact(g)
                den = den.divexact(g)
        c, den = den.content_and_primitive()
        self.num = num if c == 1 else num * (1 / Fraction(c))
        self.den = den

    # -- constructors ----------------------------------------------------------
    @classmethod
    def from_poly(cls, p: MVPoly):
        return cls(p, MVPoly.one(p.nx, p.nt), reduced=True)

    @classmethod
    def const(cls, c, nx, nt=0):
        return cls.from_poly(MVPoly.const(c, nx, nt))

    @classmethod
    def zero(cls, nx, nt=0):
        return cls.from_poly(MVPoly.zero(nx, nt))

    @classmethod
    def one(cls, nx, nt=0):
        return cls.from_poly(MVPoly.one(nx, nt))

    # -- protocol --------------------------------------------------------------
    @property
    def nx(self):
        return self.num.nx

    @property
    def nt(self):
        return self.num.nt

    def padded(self, nt):
        if nt == self.nt:
            return self
        return RatFunc(self.num.padded(nt), self.den.padded(nt), reduced=True)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.nx != self.nx:
                raise ValueError(f"x-block mismatch: {self.nx} vs {other.nx}")
            nt = max(self.nt, other.nt)
            return self.padded(nt), other.padded(nt)
        if isinstance(other, MVPoly):
            return self._coerce(RatFunc.from_poly(other))
        return self, RatFunc.const(other, self.nx, self.nt)

    def __eq__(self, other):
        try:
            a, b = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented if not isinstance(other, (RatFunc, MVPoly)) else False
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def as_poly(self) -> MVPoly:
        if not self.is_polynomial():
            raise ValueError("rational function is not a polynomial")
        return self.num

    def is_constant(self):
        return self.is_polynomial() and self.num.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value()

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        if _is_one(a.den) and _is_one(b.den):
            return RatFunc(a.num + b.num, a.den, reduced=True)
        if a.den == b.den:
            return RatFunc(a.num + b.num, a.den)
        g = poly_gcd(a.den, b.den)
        if g.is_constant():
            return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den, reduced=True)
        ad = a.den.divexact(g)
        bd = b.den.divexact(g)
        num = a.num * bd + b.num * ad
        if num.is_zero():
            return RatFunc.zero(a.nx, a.nt)
        h = poly_gcd(num, g)
        if not h.is_constant():
            num = num.divexact(h)
            g = g.divexact(h)
        return RatFunc(num, ad * bd * g, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        a, b = self._coerce(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (RatFunc, MVPoly)):
            c = as_coeff(other)
            return RatFunc(self.num * c, self.den, reduced=True)
        a, b = self._coerce(other)
        if a.is_zero() or b.is_zero():
            return RatFunc.zero(a.nx, a.nt)
        an, ad, bn, bd = a.num, a.den, b.num, b.den
        if not bd.is_constant():
            g = poly_gcd(an, bd)
            if not g.is_constant():
                an, bd = an.divexact(g), bd.divexact(g)
        if not ad.is_constant():
            g = poly_gcd(bn, ad)
            if not g.is_constant():
                bn, ad = bn.divexact(g), ad.divexact(g)
        return RatFunc(an * bn, ad * bd, reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        if not isinstance(other, (RatFunc, MVPoly)):
            c = as_coeff(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(c))
        a, b = self._coerce(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("integer exponent required")
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k, reduced=True)

    # -- actions ---------------------------------------------------------------
    def apply_matrix(self, m) -> "RatFunc":
        """Linear substitution x_i -> column i of ``m``; stays reduced."""
        return RatFunc(self.num.apply_matrix(m), self.den.apply_matrix(m), reduced=True)

    def substitute(self, images: dict) -> "RatFunc":
        return RatFunc(self.num.substitute(images), self.den.substitute(images))

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        v = Fraction(self.num.evaluate(point)) / d
        return v.numerator if v.denominator == 1 else v

    def cross_equal(self, other) -> bool:
        """Equality by cross-multiplication, independent of normal forms."""
        a, b = self._coerce(other)
        return (a.num * b.den - b.num * a.den).is_zero()

    def __str__(self):
        from .parse import format_ratfunc
        return format_ratfunc(self)

    def __repr__(self):
        return f"RatFunc({str(self)!r}, nx={self.nx}, nt={self.nt})"


def to_ratfunc(v, nx=None, nt=0) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, MVPoly):
        return RatFunc.from_poly(v)
    if nx is None:
        raise ValueError("variable counts needed to lift a scalar")
    return RatFunc.const(v, nx, nt)
