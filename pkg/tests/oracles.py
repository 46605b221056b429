"""Independent reference computations used to derive frozen test values."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy

from coxmackey.algebra import MVPoly, RatFunc


def var_names(nx, nt):
    return [f"x{i + 1}" for i in range(nx)] + [f"t{i + 1}" for i in range(nt)]


def to_sympy(v):
    """MVPoly or RatFunc as a sympy expression, built term by term (no printing)."""
    if isinstance(v, RatFunc):
        return to_sympy(v.num) / to_sympy(v.den)
    syms = sympy.symbols(var_names(v.nx, v.nt))
    out = sympy.Integer(0)
    for e, c in v.terms.items():
        term = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return out


def sympy_equal(a, b):
    return sympy.simplify(to_sympy(a) - to_sympy(b)) == 0


def swap12(p):
    """p(x2, x1, ...) for rank-2 values."""
    return p.apply_matrix([[0, 1], [1, 0]])


# ---------------------------------------------------------------------------
# sign-vector oracles


def sign(v):
    return (v > 0) - (v < 0)


def sign_vector(normals, lam):
    return tuple(sign(sum(a * b for a, b in zip(n, lam))) for n in normals)


def grid_sign_vectors(normals, r, bound):
    """All sign vectors realized by integer points of the box [-bound, bound]^r."""
    return {sign_vector(normals, p) for p in itertools.product(range(-bound, bound + 1), repeat=r)}


def fubini(n):
    """Number of ordered set partitions of an n-element set."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(sympy.binomial(m, k) * a[m - k] for k in range(1, m + 1)))
    return int(a[n])


def first_cell_on_segment(normals, lam, mu):
    """Sign vector of the first cell met when walking from lam towards mu.

    Crossing parameters t in (0, 1] where some <a, (1-t)lam + t mu> vanishes are
    sorted; the walk is sampled strictly before the first one.
    """
    lam = [Fraction(v) for v in lam]
    mu = [Fraction(v) for v in mu]
    ts = []
    for a in normals:
        x = sum(p * q for p, q in zip(a, lam))
        y = sum(p * q for p, q in zip(a, mu))
        if x != y:
            t = x / (x - y)
            if 0 < t <= 1:
                ts.append(t)
    t = min(ts) / 2 if ts else Fraction(1, 2)
    pt = [(1 - t) * p + t * q for p, q in zip(lam, mu)]
    return sign_vector(normals, pt)


def random_normals(rng, r, count, bound=2):
    out = []
    while len(out) < count:
        v = tuple(rng.randint(-bound, bound) for _ in range(r))
        if any(v):
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# group oracles


def perm_matrices(n):
    out = []
    for p in itertools.permutations(range(n)):
        out.append(tuple(tuple(1 if p[j] == i else 0 for j in range(n)) for i in range(n)))
    return out


def brute_double_cosets(left, group, right, mul):
    """Partition of ``group`` into left-x-right double cosets by direct closure."""
    seen, blocks = set(), []
    for g in group:
        if g in seen:
            continue
        block = {mul(mul(a, g), b) for a in left for b in right}
        seen |= block
        blocks.append(block)
    return blocks


# ---------------------------------------------------------------------------
# vanishing oracle


def random_rational(rng, bound=30):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _eval_poly(poly_dict, point):
    total = Fraction(0)
    for exps, c in poly_dict.items():
        term = Fraction(int(c.p), int(c.q))
        for v, e in zip(point, exps):
            term *= v ** e
        total += term
    return total


def vanishes_at_random_points(p: MVPoly, equations, rng, points=50):
    """Evaluate p at random rational points of the common zero set of linear forms.

    The zero set is parametrized by sympy solve (independent of the library
    rref); p and the parametrization are then evaluated exactly with Fractions.
    """
    syms = sympy.symbols(var_names(p.nx, p.nt))
    eqs = [sum(c * s for c, s in zip(e, syms)) for e in equations]
    solved = sympy.solve(eqs, dict=True)[0]
    free = [s for s in syms if s not in solved] or [sympy.Symbol("_unused")]
    coords = [sympy.Poly(solved.get(s, s), *free).as_dict() for s in syms]
    restricted = sympy.Poly(sympy.expand(to_sympy(p).subs(solved, simultaneous=True)), *free).as_dict()
    eq_polys = [sympy.Poly(e, *syms).as_dict() for e in eqs]
    for _ in range(points):
        pt = [random_rational(rng) for _ in free]
        full = [_eval_poly(c, pt) for c in coords]
        assert all(_eval_poly(e, full) == 0 for e in eq_polys)
        if _eval_poly(restricted, pt) != 0:
            return False
    return True


def seeded(*parts):
    return random.Random(":".join(map(str, parts)))


def random_wheel_candidate(nx, nt, subspaces, rng, degree=2):
    """Product of one defining form from a random subset of subspaces with a random factor.

    Such a polynomial vanishes on every chosen subspace; whether it vanishes
    on the others is left for the oracle to decide.
    """
    chosen = [s for s in subspaces if rng.random() < 0.6]
    p = MVPoly.one(nx, nt)
    for s in chosen:
        p = p * MVPoly.linear(rng.choice(s.equations()), nx, nt)
    n = nx + nt
    q = MVPoly(nx, nt, {tuple(rng.randint(0, degree) if rng.random() < 0.5 else 0 for _ in range(n)):
                        rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(3)})
    if q.is_zero():
        q = MVPoly.one(nx, nt)
    return p * q
