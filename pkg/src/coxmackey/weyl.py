"""Finite groups of integer matrices: elements, closure, subgroups, cosets.

Elements are ordered identity first, then lexicographically on row-major
entries.  Canonical coset representatives are minima in this order, so the
trivial (double) coset is always represented by the identity.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from . import linalg


class WeylElement:
    """r x r unimodular integer matrix acting on the T-block of characters."""

    __slots__ = ("matrix", "_key", "_hash", "_inv")

    def __init__(self, matrix):
        rows = tuple(tuple(int(v) for v in row) for row in matrix)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("Weyl group element must be a square matrix")
        self.matrix = rows
        flat = tuple(v for row in rows for v in row)
        ident = all(rows[i][j] == (i == j) for i in range(n) for j in range(n))
        self._key = (not ident, flat)
        self._hash = hash(rows)
        self._inv = None

    @classmethod
    def identity(cls, r):
        return cls(linalg.identity(r))

    @property
    def rank(self):
        return len(self.matrix)

    def is_identity(self):
        return not self._key[0]

    def sort_key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(linalg.matmul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        if self._inv is None:
            inv = linalg.inverse(self.matrix)
            if any(Fraction(v).denominator != 1 for row in inv for v in row):
                raise ValueError("matrix is not unimodular")
            self._inv = WeylElement([[int(v) for v in row] for row in inv])
        return self._inv

    def act_on_character(self, vec):
        """alpha -> M alpha on the T-block; the auxiliary block is fixed."""
        r = self.rank
        head = linalg.matvec(self.matrix, vec[:r])
        return tuple(head) + tuple(vec[r:])

    def act_on_cocharacter(self, lam):
        """lambda -> M^{-T} lambda, so that <M a, M^{-T} l> = <a, l>."""
        inv = self.inverse().matrix
        return tuple(linalg.matvec(linalg.transpose(inv), lam))

    def act(self, value):
        """Action on polynomials and rational functions (x_i -> column i)."""
        if self.is_identity():
            return value
        return value.apply_matrix(self.matrix)

    def __repr__(self):
        return f"WeylElement({[list(r) for r in self.matrix]})"


def check_unimodular(matrix):
    d = linalg.det(matrix)
    if d not in (1, -1):
        raise ValueError(f"generator {matrix} is not unimodular (det {d})")


def weyl_closure(generators, rank=None, cap=10**5) -> list[WeylElement]:
    """Breadth-first closure of the generated group, sorted canonically."""
    gens = [g if isinstance(g, WeylElement) else WeylElement(g) for g in generators]
    if rank is None:
        if not gens:
            raise ValueError("rank needed when there are no generators")
        rank = gens[0].rank
    for g in gens:
        if g.rank != rank:
            raise ValueError("generators of different sizes")
        check_unimodular(g.matrix)
    ident = WeylElement.identity(rank)
    seen = {ident}
    queue = deque([ident])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = a * g
            if b not in seen:
                seen.add(b)
                if len(seen) > cap:
                    raise ValueError(f"group closure exceeds {cap} elements")
                queue.append(b)
    return sorted(seen)


def permutation_matrix(perm):
    """Matrix sending e_i to e_{perm[i]}."""
    n = len(perm)
    return [[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)]


def symmetric_group(n):
    gens = [permutation_matrix([i + 1 if k == i else i if k == i + 1 else k for k in range(n)])
            for i in range(n - 1)]
    return weyl_closure(gens, rank=n)


def signed_permutation_group(n):
    gens = [permutation_matrix([i + 1 if k == i else i if k == i + 1 else k for k in range(n)])
            for i in range(n - 1)]
    if n:
        flip = linalg.identity(n)
        flip[n - 1][n - 1] = -1
        gens.append(flip)
    return weyl_closure(gens, rank=n)


def block_product(groups_with_ranks):
    """Direct product of groups acting on consecutive coordinate blocks."""
    total = sum(r for _, r in groups_with_ranks)
    gens = []
    offset = 0
    for elems, r in groups_with_ranks:
        for g in elems:
            m = linalg.identity(total)
            for i in range(r):
                for j in range(r):
                    m[offset + i][offset + j] = g.matrix[i][j]
            gens.append(m)
        offset += r
    return weyl_closure(gens, rank=total)


class Subgroup:
    """Explicit subgroup of a finite matrix group."""

    __slots__ = ("elements", "_set", "_gens", "rank")

    def __init__(self, elements, rank=None):
        self.elements = tuple(sorted(set(elements)))
        if not self.elements:
            raise ValueError("a subgroup contains at least the identity")
        self.rank = self.elements[0].rank if rank is None else rank
        self._set = frozenset(self.elements)
        self._gens = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self._set

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def issubset(self, other: "Subgroup"):
        return self._set <= other._set

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self._set & other._set, self.rank)

    def is_closed(self):
        s = self._set
        return all(a * b in s for a in s for b in s) and all(a.inverse() in s for a in s)

    def generators(self):
        """A small generating set, chosen greedily in canonical order."""
        if self._gens is None:
            gens = []
            span = {WeylElement.identity(self.rank)}
            for g in self.elements:
                if g not in span:
                    gens.append(g)
                    span = set(weyl_closure(gens, rank=self.rank))
            self._gens = tuple(gens)
        return self._gens

    def conjugate(self, w: WeylElement) -> "Subgroup":
        wi = w.inverse()
        return Subgroup([w * h * wi for h in self.elements], self.rank)

    def __repr__(self):
        return f"Subgroup(order={len(self)})"


def _require_subgroup(h: Subgroup, g: Subgroup):
    if not h.issubset(g):
        raise ValueError("not a subgroup of the ambient group")


def left_coset(g: WeylElement, h: Subgroup):
    return frozenset(g * x for x in h)


def coset_reps(h: Subgroup, g: Subgroup) -> list[WeylElement]:
    """Minimal representative of every left coset xH of H in G."""
    _require_subgroup(h, g)
    covered = set()
    reps = []
    for x in g.elements:
        if x in covered:
            continue
        reps.append(x)
        covered.update(x * y for y in h)
    if len(reps) * len(h) != len(g):
        raise ValueError("cosets do not partition the group; H is not a subgroup")
    return reps


def double_coset_reps(left: Subgroup, g: Subgroup, right: Subgroup) -> list[WeylElement]:
    """Minimal representative of every double coset L x R in G."""
    _require_subgroup(left, g)
    _require_subgroup(right, g)
    covered = set()
    reps = []
    for x in g.elements:
        if x in covered:
            continue
        reps.append(x)
        covered.update(a * x * b for a in left for b in right)
    return reps


def double_coset(left: Subgroup, x: WeylElement, right: Subgroup):
    return frozenset(a * x * b for a in left for b in right)
