"""Sparse multivariate polynomials over Q.

A polynomial lives in Q[x1..xr, t1..tm]: ``nx`` variables acted on by the Weyl
group followed by ``nt`` variables on which it acts trivially.  Terms are
stored as ``{exponent tuple: coefficient}`` with coefficients ``int`` or
``Fraction`` (a ``Fraction`` with denominator 1 is always stored as ``int``).

The monomial order is graded lexicographic with x1 > ... > xr > t1 > ... > tm.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd, lcm as ilcm
from numbers import Rational
from operator import add

Coeff = int | Fraction


def as_coeff(c) -> Coeff:
    """Coerce an int/Fraction/str into a stored coefficient."""
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, (Rational, str)):
        c = Fraction(c)
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not an exact rational: {c!r}")


def _clean(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(e):
    return (sum(e), e)


# ---------------------------------------------------------------------------
# raw dict kernels; keys are equal-length exponent tuples

def _radd(a, b, sign=1):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = _clean(v)
        else:
            out.pop(e, None)
    return out


def _rmul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(add, ea, eb))
            out[e] = get(e, 0) + ca * cb
    return {e: _clean(c) for e, c in out.items() if c}


def _rscale(a, c):
    if c == 1:
        return dict(a)
    return {e: _clean(v * c) for e, v in a.items()}


def _lead(a):
    return max(a, key=grlex_key)


def _rdivexact(a, b):
    """Quotient a/b if b divides a exactly, else None."""
    if not a:
        return {}
    eb = _lead(b)
    cb = b[eb]
    rest = [(e, c) for e, c in b.items() if e != eb]
    r = dict(a)
    q = {}
    while r:
        er = _lead(r)
        de = tuple(x - y for x, y in zip(er, eb))
        if min(de) < 0:
            return None
        cr = r.pop(er)
        if type(cr) is int and type(cb) is int and cr % cb == 0:
            cq = cr // cb
        else:
            cq = _clean(Fraction(cr) / cb)
        q[de] = cq
        for e, c in rest:
            k = tuple(map(add, e, de))
            v = r.get(k, 0) - cq * c
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    return {e: _clean(c) for e, c in q.items()}


def _int_primitive(a):
    """(rational content, integer primitive part with positive leading coeff)."""
    den = 1
    for c in a.values():
        if type(c) is Fraction:
            den = ilcm(den, c.denominator)
    ints = {e: int(c * den) for e, c in a.items()}
    g = 0
    for c in ints.values():
        g = igcd(g, c)
        if g == 1:
            break
    if ints[_lead(ints)] < 0:
        g = -g
    prim = {e: c // g for e, c in ints.items()}
    return _clean(Fraction(g, den)), prim


def _vars(a):
    n = len(next(iter(a)))
    used = [False] * n
    for e in a:
        for i, k in enumerate(e):
            if k:
                used[i] = True
    return {i for i in range(n) if used[i]}


def _is_const(a):
    return len(a) == 1 and not any(next(iter(a)))


def _monomial_min(a):
    it = iter(a)
    m = list(next(it))
    for e in it:
        for i, k in enumerate(e):
            if k < m[i]:
                m[i] = k
    return tuple(m)


def _shift(a, m, sign=-1):
    return {tuple(x + sign * y for x, y in zip(e, m)): c for e, c in a.items()}


def _split(a, positions):
    """Group terms by their exponents at ``positions``; zero those out."""
    groups = {}
    pos = set(positions)
    for e, c in a.items():
        key = tuple(e[i] for i in positions)
        rest = tuple(0 if i in pos else k for i, k in enumerate(e))
        groups.setdefault(key, {})[rest] = c
    return groups


def _deg_in(a, v):
    return max(e[v] for e in a)


def _coeff_in(a, v, k):
    out = {}
    for e, c in a.items():
        if e[v] == k:
            out[e[:v] + (0,) + e[v + 1:]] = c
    return out


def _prem(a, b, v):
    """Sparse pseudo-remainder of a by b as polynomials in variable v."""
    db = _deg_in(b, v)
    lb = _coeff_in(b, v, db)
    r = a
    while r:
        dr = _deg_in(r, v)
        if dr < db:
            break
        lr = _coeff_in(r, v, dr)
        step = dr - db
        shifted = {e[:v] + (e[v] + step,) + e[v + 1:]: c for e, c in lr.items()}
        r = _radd(_rmul(lb, r), _rmul(shifted, b), -1)
        if r:
            r = _int_primitive(r)[1]
    return r


def _content_in(a, v):
    """gcd of the coefficients of a viewed in Z[rest][v]."""
    coeffs = sorted(_split(a, [v]).values(), key=len)
    g = coeffs[0]
    for c in coeffs[1:]:
        if _is_const(g):
            break
        g = _gcd_prim(g, c)
    return g


def _gcd_prim(a, b):
    """GCD of two nonzero integer polynomials, up to sign and integer content.

    Content/primitive-part recursion, eliminating one variable at a time.
    """
    n = len(next(iter(a)))
    one = {(0,) * n: 1}
    if _is_const(a) or _is_const(b):
        return one
    ma, mb = _monomial_min(a), _monomial_min(b)
    m = tuple(map(min, ma, mb))
    if any(ma):
        a = _shift(a, ma)
    if any(mb):
        b = _shift(b, mb)
    mono = {m: 1}
    if _is_const(a) or _is_const(b):
        return mono
    if a == b:
        return _rmul(mono, a) if any(m) else a
    # a linear side is irreducible: it either divides the other side or is coprime
    for p, q in ((a, b), (b, a)):
        if max(map(sum, p)) == 1:
            g = p if _rdivexact(q, p) is not None else one
            return _rmul(mono, g) if any(m) else g
    va, vb = _vars(a), _vars(b)
    only_a, only_b = va - vb, vb - va
    if only_a or only_b:
        # the gcd cannot involve a variable missing from one side, so it
        # divides every coefficient of the other side in those variables
        g = b if only_a else a
        src = a if only_a else b
        for part in sorted(_split(src, sorted(only_a or only_b)).values(), key=len):
            g = _gcd_prim(g, _int_primitive(part)[1])
            if _is_const(g):
                return mono
        return _rmul(mono, g) if any(m) else g
    v = min(va, key=lambda i: (min(_deg_in(a, i), _deg_in(b, i)), i))
    ca, cb = _content_in(a, v), _content_in(b, v)
    c = _gcd_prim(ca, cb)
    if not _is_const(ca):
        a = _rdivexact(a, ca)
    if not _is_const(cb):
        b = _rdivexact(b, cb)
    a, b = _int_primitive(a)[1], _int_primitive(b)[1]
    if _deg_in(a, v) < _deg_in(b, v):
        a, b = b, a
    while True:
        r = _prem(a, b, v)
        if not r:
            break
        if _deg_in(r, v) == 0:
            b = one
            break
        a, b = b, r
        cr = _content_in(b, v)
        if not _is_const(cr):
            b = _int_primitive(_rdivexact(b, cr))[1]
    if not _is_const(b):
        cb2 = _content_in(b, v)
        if not _is_const(cb2):
            b = _rdivexact(b, cb2)
    g = _rmul(c, b)
    if any(m):
        g = _rmul(mono, g)
    return _int_primitive(g)[1]


# ---------------------------------------------------------------------------


class MVPoly:
    """Immutable sparse polynomial in ``nx`` Weyl variables and ``nt`` torus variables.

    Arithmetic between polynomials with different ``nt`` pads the shorter
    exponent vectors with zeros (the extra t-variables are appended last).
    """

    __slots__ = ("nx", "nt", "terms", "_hash")

    def __init__(self, nx: int, nt: int = 0, terms=None, _trusted=False):
        self.nx = nx
        self.nt = nt
        self._hash = None
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            n = nx + nt
            clean = {}
            for e, c in terms.items():
                e = tuple(int(k) for k in e)
                if len(e) != n or min(e, default=0) < 0:
                    raise ValueError(f"bad exponent vector {e} for {n} variables")
                c = as_coeff(c)
                if c:
                    clean[e] = _clean(clean.get(e, 0) + c)
                    if not clean[e]:
                        del clean[e]
            self.terms = clean

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, nx, nt=0):
        return cls(nx, nt, {}, _trusted=True)

    @classmethod
    def const(cls, c, nx, nt=0):
        c = as_coeff(c)
        return cls(nx, nt, {(0,) * (nx + nt): c} if c else {}, _trusted=True)

    @classmethod
    def one(cls, nx, nt=0):
        return cls.const(1, nx, nt)

    @classmethod
    def var(cls, i, nx, nt=0):
        """The i-th variable (0-based over x1..xr, t1..tm)."""
        n = nx + nt
        if not 0 <= i < n:
            raise IndexError(i)
        e = [0] * n
        e[i] = 1
        return cls(nx, nt, {tuple(e): 1}, _trusted=True)

    @classmethod
    def linear(cls, coeffs, nx, nt=0):
        """Linear form sum(coeffs[i] * var_i); ``coeffs`` may be shorter than nx+nt."""
        n = nx + nt
        if len(coeffs) > n:
            raise ValueError("too many coefficients for the variable count")
        terms = {}
        for i, c in enumerate(coeffs):
            c = as_coeff(c)
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(nx, nt, terms, _trusted=True)

    # -- basic protocol ------------------------------------------------------
    @property
    def nvars(self):
        return self.nx + self.nt

    def padded(self, nt):
        if nt == self.nt:
            return self
        if nt < self.nt:
            raise ValueError("cannot drop variables by padding")
        z = (0,) * (nt - self.nt)
        return MVPoly(self.nx, nt, {e + z: c for e, c in self.terms.items()}, _trusted=True)

    def _coerce(self, other):
        if isinstance(other, MVPoly):
            if other.nx != self.nx:
                raise ValueError(f"x-block mismatch: {self.nx} vs {other.nx}")
            nt = max(self.nt, other.nt)
            return self.padded(nt), other.padded(nt)
        return self, MVPoly.const(other, self.nx, self.nt)

    def __eq__(self, other):
        if isinstance(other, MVPoly):
            if other.nx != self.nx:
                return False
            a, b = self._coerce(other)
            return a.terms == b.terms
        try:
            return self == MVPoly.const(other, self.nx, self.nt)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            items = []
            for e, c in self.terms.items():
                k = len(e)
                while k > self.nx and e[k - 1] == 0:
                    k -= 1
                items.append((e[:k], c))
            self._hash = hash((self.nx, frozenset(items)))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or _is_const(self.terms)

    def constant_value(self) -> Coeff:
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def variables(self):
        return _vars(self.terms) if self.terms else set()

    def leading_term(self):
        e = _lead(self.terms)
        return e, self.terms[e]

    def leading_coeff(self) -> Coeff:
        return self.leading_term()[1] if self.terms else 0

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: grlex_key(ec[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        return MVPoly(a.nx, a.nt, _radd(a.terms, b.terms), _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MVPoly(self.nx, self.nt, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        a, b = self._coerce(other)
        return MVPoly(a.nx, a.nt, _radd(a.terms, b.terms, -1), _trusted=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MVPoly):
            c = as_coeff(other)
            if not c:
                return MVPoly.zero(self.nx, self.nt)
            return MVPoly(self.nx, self.nt, _rscale(self.terms, c), _trusted=True)
        a, b = self._coerce(other)
        if not a.terms or not b.terms:
            return MVPoly.zero(a.nx, a.nt)
        return MVPoly(a.nx, a.nt, _rmul(a.terms, b.terms), _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = MVPoly.one(self.nx, self.nt)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def scale(self, c):
        return self * c

    def divexact(self, other: "MVPoly") -> "MVPoly":
        """Exact quotient; raises ArithmeticError if ``other`` does not divide ``self``."""
        a, b = self._coerce(other)
        if not b.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        q = _rdivexact(a.terms, b.terms)
        if q is None:
            raise ArithmeticError("polynomial division is not exact")
        return MVPoly(a.nx, a.nt, q, _trusted=True)

    def divides(self, other: "MVPoly") -> bool:
        a, b = self._coerce(other)
        if not a.terms:
            return not b.terms
        return _rdivexact(b.terms, a.terms) is not None

    # -- normal forms --------------------------------------------------------
    def content_and_primitive(self):
        """``self == content * prim`` with prim integral, primitive, positive lead."""
        if not self.terms:
            return 0, self
        c, prim = _int_primitive(self.terms)
        return c, MVPoly(self.nx, self.nt, prim, _trusted=True)

    def monic(self):
        return self * _clean(1 / Fraction(self.leading_coeff()))

    # -- evaluation and substitution ------------------------------------------
    def evaluate(self, point):
        """Value at ``point`` (length nx+nt, exact rationals)."""
        if len(point) != self.nvars:
            raise ValueError("point has the wrong length")
        pt = [Fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for p, k in zip(pt, e):
                if k:
                    v *= p ** k
            total += v
        return _clean(total)

    def substitute(self, images: dict) -> "MVPoly":
        """Replace variable i by the polynomial ``images[i]`` (others unchanged)."""
        out = MVPoly.zero(self.nx, self.nt)
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = images[i] ** k
            return cache[key]

        for e, c in self.terms.items():
            kept = tuple(0 if i in images else k for i, k in enumerate(e))
            term = MVPoly(self.nx, self.nt, {kept: c}, _trusted=True)
            for i, k in enumerate(e):
                if k and i in images:
                    term = term * power(i, k)
            out = out + term
        return out

    def apply_matrix(self, m) -> "MVPoly":
        """x_i -> sum_j m[j][i] x_j (column i of ``m``); t-variables fixed."""
        r = self.nx
        if len(m) != r or any(len(row) != r for row in m):
            raise ValueError(f"substitution matrix must be {r}x{r}")
        cols = [[m[j][i] for j in range(r)] for i in range(r)]
        signed_perm = all(sum(1 for v in col if v) == 1 and abs(sum(col)) == 1 for col in cols)
        if signed_perm:
            target = [next(j for j, v in enumerate(col) if v) for col in cols]
            sgn = [sum(col) for col in cols]
            if sorted(target) != list(range(r)):
                raise ValueError("matrix is not invertible")
            out = {}
            for e, c in self.terms.items():
                ne = list(e)
                s = 1
                for i in range(r):
                    ne[target[i]] = e[i]
                    if sgn[i] < 0 and e[i] & 1:
                        s = -s
                out[tuple(ne)] = c if s > 0 else -c
            return MVPoly(self.nx, self.nt, out, _trusted=True)
        from ..linalg import det
        if abs(det(m)) != 1:
            raise ValueError("substitution matrix is not invertible over the integers")
        images = {i: MVPoly.linear(cols[i], self.nx, self.nt) for i in range(r)}
        return self.substitute(images)

    # -- printing --------------------------------------------------------------
    def __str__(self):
        from .parse import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"MVPoly({str(self)!r}, nx={self.nx}, nt={self.nt})"


def poly_gcd(a: MVPoly, b: MVPoly) -> MVPoly:
    """Canonical GCD: integral, primitive, positive leading coefficient; gcd(0, 0) = 0."""
    a, b = a._coerce(b)
    if not a.terms:
        return b.content_and_primitive()[1]
    if not b.terms:
        return a.content_and_primitive()[1]
    pa = _int_primitive(a.terms)[1]
    pb = _int_primitive(b.terms)[1]
    g = _gcd_prim(pa, pb)
    return MVPoly(a.nx, a.nt, _int_primitive(g)[1], _trusted=True)
