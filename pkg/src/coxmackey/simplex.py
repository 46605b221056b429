"""Exact primal simplex for  max c.z  s.t.  A z <= b, z >= 0, with b >= 0.

Since b >= 0 the slack basis is feasible, so no phase one is needed.  Bland's
rule (smallest index enters and leaves) rules out cycling.
"""

from __future__ import annotations

from fractions import Fraction


class Unbounded(ArithmeticError):
    pass


def maximize(c, A, b):
    """Return (optimum, z) in exact rationals; raises Unbounded."""
    m = len(A)
    n = len(c)
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("right-hand side must be non-negative")
    # row i: [A_i | e_i | b_i]
    tab = []
    for i, row in enumerate(A):
        if len(row) != n:
            raise ValueError("constraint row has the wrong length")
        slack = [Fraction(0)] * m
        slack[i] = Fraction(1)
        tab.append([Fraction(v) for v in row] + slack + [Fraction(b[i])])
    # reduced-cost row: value of increasing each variable
    cost = [Fraction(v) for v in c] + [Fraction(0)] * m
    obj = Fraction(0)
    basis = [n + i for i in range(m)]
    width = n + m
    while True:
        enter = next((j for j in range(width) if cost[j] > 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise Unbounded("objective is unbounded")
        prow = tab[leave]
        inv = 1 / prow[enter]
        prow = [v * inv for v in prow]
        tab[leave] = prow
        for i in range(m):
            if i != leave:
                f = tab[i][enter]
                if f:
                    tab[i] = [x - f * y for x, y in zip(tab[i], prow)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, prow[:-1])]
        obj += f * prow[-1]
        basis[leave] = enter
    z = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            z[bv] = tab[i][-1]
    return obj, z


def strict_feasible_point(rows, dim):
    """A point y with row . y > 0 for every row, or None if none exists.

    Solves  max eps  s.t.  row . y >= eps,  eps <= 1  with y = y+ - y-.
    """
    if not rows:
        return [Fraction(0)] * dim
    n = 2 * dim + 1
    A = []
    for row in rows:
        # -row.(y+ - y-) + eps <= 0
        A.append([-Fraction(v) for v in row] + [Fraction(v) for v in row] + [Fraction(1)])
    A.append([Fraction(0)] * (2 * dim) + [Fraction(1)])
    b = [0] * len(rows) + [1]
    c = [0] * (2 * dim) + [1]
    opt, z = maximize(c, A, b)
    if opt <= 0:
        return None
    return [z[i] - z[dim + i] for i in range(dim)]
