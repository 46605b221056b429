"""Exact linear algebra over Q on small dense matrices (lists of rows)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def rref(rows):
    """Reduced row echelon form. Returns (matrix of Fractions, pivot columns)."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def primitive(vec):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    vec = [Fraction(v) for v in vec]
    den = 1
    for v in vec:
        den = lcm(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(ints)
    return tuple(v // g for v in ints)


def canonical_ray(vec):
    """Primitive integer vector with first nonzero entry positive, and that sign."""
    p = primitive(vec)
    lead = next((v for v in p if v), 0)
    if lead < 0:
        return tuple(-v for v in p), -1
    return p, 1 if lead else 0


def nullspace(rows, ncols=None):
    """Integer primitive basis of {y : A y = 0}."""
    if not rows:
        if ncols is None:
            raise ValueError("column count needed for an empty matrix")
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    ncols = len(rows[0])
    m, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -m[i][fc]
        basis.append(primitive(v))
    return basis


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def matmul(a, b):
    cols = list(zip(*b))
    return [[dot(row, col) for col in cols] for row in a]


def matvec(a, v):
    return [dot(row, v) for row in a]


def transpose(a):
    return [list(c) for c in zip(*a)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def inverse(a):
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    aug = [list(row) + identity(n)[i] for i, row in enumerate(a)]
    m, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]


def det(a):
    """Exact determinant by fraction-free elimination (Bareiss)."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    m = [[Fraction(v) for v in row] for row in a]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    d = sign * m[n - 1][n - 1] if n else Fraction(1)
    return d.numerator if d.denominator == 1 else d


def in_row_span(rows, vec):
    if not rows:
        return not any(vec)
    return rank(list(rows) + [list(vec)]) == rank(rows)
