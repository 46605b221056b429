"""Central hyperplane arrangements in the cocharacter space: cells and flats.

Hyperplanes are stored by a canonical primitive normal (first nonzero entry
positive).  A cell is a realizable sign vector over these normals together with
a rational point (witness) realizing it; a flat is a saturated set of
hyperplane indices together with an integer basis of their common kernel.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import linalg
from .simplex import strict_feasible_point


def _sign(v):
    return (v > 0) - (v < 0)


def _normalize_point(lam):
    out = []
    for v in lam:
        v = Fraction(v)
        out.append(v.numerator if v.denominator == 1 else v)
    return tuple(out)


class Cell:
    """A face of the arrangement: signs per hyperplane plus a witness point."""

    __slots__ = ("arr", "signs", "witness", "_hash")

    def __init__(self, arr: "Arrangement", signs, witness):
        self.arr = arr
        self.signs = tuple(signs)
        self.witness = _normalize_point(witness)
        if len(self.witness) != arr.r:
            raise ValueError(f"witness {witness} should have length {arr.r}")
        if arr.sign_vector(self.witness) != self.signs:
            raise ValueError(f"witness {self.witness} does not realize signs {self.signs}")
        self._hash = hash(self.signs)

    def __eq__(self, other):
        return (isinstance(other, Cell) and self.signs == other.signs
                and (self.arr is other.arr or self.arr.normals == other.arr.normals))

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.signs.count(0), tuple(-s for s in self.signs))

    def sign_of(self, vec):
        """Sign of <alpha, witness> for a character alpha (only its T-part is used)."""
        return _sign(linalg.dot(vec[:self.arr.r], self.witness))

    def zero_set(self):
        return frozenset(i for i, s in enumerate(self.signs) if s == 0)

    def is_chamber(self):
        return 0 not in self.signs

    def is_origin(self):
        return not any(self.signs)

    def label(self):
        """Primitive integer witness, e.g. ``(-2,-1)``."""
        p = linalg.primitive(self.witness)
        return "(" + ",".join(str(v) for v in p) + ")"

    def __repr__(self):
        s = "".join("+" if v > 0 else "-" if v < 0 else "0" for v in self.signs)
        return f"Cell[{s}]{self.label()}"


class Flat:
    """Intersection of hyperplanes, keyed by the saturated vanishing set."""

    __slots__ = ("arr", "vanishing", "basis", "_hash")

    def __init__(self, arr: "Arrangement", vanishing, basis):
        self.arr = arr
        self.vanishing = frozenset(vanishing)
        self.basis = tuple(tuple(b) for b in basis)
        self._hash = hash(self.vanishing)

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Flat) and self.vanishing == other.vanishing
                and (self.arr is other.arr or self.arr.normals == other.arr.normals))

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (-self.dim, sorted(self.vanishing))

    def contains_point(self, lam):
        return all(linalg.dot(self.arr.normals[h], lam) == 0 for h in self.vanishing)

    def vanishes(self, vec):
        """True iff the character (T-part of ``vec``) is identically zero on the flat."""
        t = vec[:self.arr.r]
        return all(linalg.dot(t, b) == 0 for b in self.basis)

    def is_origin(self):
        return self.dim == 0

    def __repr__(self):
        return f"Flat(dim={self.dim}, vanishing={sorted(self.vanishing)})"


class Arrangement:
    """The arrangement cut out by a list of nonzero characters in rank r."""

    def __init__(self, r: int, characters, spec=None):
        self.r = r
        self.spec = spec
        normals = []
        seen = set()
        for v in characters:
            t = tuple(v[:r])
            if not any(t):
                continue
            ray, _ = linalg.canonical_ray(t)
            if ray not in seen:
                seen.add(ray)
                normals.append(ray)
        self.normals = tuple(normals)
        self._flats = None
        self._flat_index = {}
        self._cells = None
        self._tits = {}

    @classmethod
    def from_spec(cls, spec):
        chars = [w.vector for w in spec.v_weights] + [a.vector for a in spec.g_roots]
        return cls(spec.r, chars, spec)

    def __len__(self):
        return len(self.normals)

    # -- points --------------------------------------------------------------
    def sign_vector(self, lam):
        if len(lam) != self.r:
            raise ValueError(f"cocharacter {tuple(lam)} should have length {self.r}")
        return tuple(_sign(linalg.dot(a, lam)) for a in self.normals)

    def cell_of(self, lam) -> Cell:
        return Cell(self, self.sign_vector(lam), lam)

    def origin_cell(self) -> Cell:
        return self.cell_of((0,) * self.r)

    # -- flats ---------------------------------------------------------------
    def _make_flat(self, hyperplanes):
        key = tuple(hyperplanes)
        hit = self._flat_index.get(key)
        if hit is not None:
            return hit
        f = self._build_flat(key)
        self._flat_index[key] = f
        return f

    def _build_flat(self, hyperplanes):
        rows = [self.normals[h] for h in hyperplanes]
        basis = linalg.nullspace(rows, self.r) if rows else linalg.nullspace([], self.r)
        vanishing = frozenset(h for h, a in enumerate(self.normals)
                              if all(linalg.dot(a, b) == 0 for b in basis))
        if vanishing in self._flat_index:
            return self._flat_index[vanishing]
        f = Flat(self, vanishing, basis)
        self._flat_index[vanishing] = f
        return f

    def flats(self) -> list[Flat]:
        """All intersections of hyperplanes, the ambient space included."""
        if self._flats is None:
            ambient = self._make_flat(())
            found = {ambient.vanishing: ambient}
            frontier = [ambient]
            while frontier:
                nxt = []
                for f in frontier:
                    for h in range(len(self.normals)):
                        if h in f.vanishing:
                            continue
                        g = self._make_flat(sorted(f.vanishing | {h}))
                        if g.vanishing not in found:
                            found[g.vanishing] = g
                            nxt.append(g)
                frontier = nxt
            self._flats = sorted(found.values())
        return list(self._flats)

    def flat_of_vanishing(self, hyperplanes) -> Flat:
        return self._make_flat(sorted(hyperplanes))

    def ambient(self) -> Flat:
        return self._make_flat(())

    def origin_flat(self) -> Flat:
        return self._make_flat(range(len(self.normals)))

    def span_flat(self, c: Cell) -> Flat:
        """<C>: the flat spanned by the cell, cut out by its zero signs."""
        self._check(c)
        return self._make_flat(sorted(c.zero_set()))

    def flat_of_cocharacter(self, mu) -> Flat:
        return self.span_flat(self.cell_of(mu))

    def flat_of_subspace(self, basis) -> Flat:
        """The smallest flat containing the span of ``basis``."""
        vanishing = [h for h, a in enumerate(self.normals)
                     if all(linalg.dot(a, b) == 0 for b in basis)]
        return self._make_flat(vanishing)

    def generic_point(self, f: Flat):
        """A point of F on no hyperplane that does not contain F."""
        if f.dim == 0:
            return (0,) * self.r
        others = [self.normals[h] for h in range(len(self.normals)) if h not in f.vanishing]
        k = 1
        while True:
            y = [k ** j for j in range(f.dim)]
            lam = tuple(sum(y[j] * f.basis[j][i] for j in range(f.dim)) for i in range(self.r))
            if all(linalg.dot(a, lam) != 0 for a in others):
                return lam
            k += 1

    # -- cells ---------------------------------------------------------------
    def open_cells(self, f: Flat) -> list[Cell]:
        """Cells whose span is F, by incremental hyperplane insertion with LP."""
        d = f.dim
        outside = [h for h in range(len(self.normals)) if h not in f.vanishing]
        if d == 0:
            return [self.origin_cell()]
        rows = {h: [linalg.dot(self.normals[h], b) for b in f.basis] for h in outside}
        patterns = [((), None)]
        for h in outside:
            nxt = []
            for pat, y in patterns:
                cons = [[s * v for v in rows[hh]] for hh, s in zip(outside, pat)]
                tried = set()
                if y is not None:
                    s0 = _sign(linalg.dot(rows[h], y))
                    if s0:
                        nxt.append((pat + (s0,), y))
                        tried.add(s0)
                for s in (1, -1):
                    if s in tried:
                        continue
                    z = strict_feasible_point(cons + [[s * v for v in rows[h]]], d)
                    if z is not None:
                        nxt.append((pat + (s,), z))
            patterns = nxt
        if patterns == [((), None)]:
            return [self.cell_of(self.generic_point(f))]
        cells = []
        for pat, y in patterns:
            lam = [sum(Fraction(y[j]) * f.basis[j][i] for j in range(d)) for i in range(self.r)]
            cells.append(self.cell_of(linalg.primitive(lam)))
        return sorted(cells)

    def cells(self) -> list[Cell]:
        if self._cells is None:
            out = []
            for f in self.flats():
                out.extend(self.open_cells(f))
            self._cells = out
        return list(self._cells)

    def chambers(self) -> list[Cell]:
        return [c for c in self.cells() if c.is_chamber()]

    # -- order and product ---------------------------------------------------
    def _check(self, *objs):
        for o in objs:
            if o.arr is not self and o.arr.normals != self.normals:
                raise ValueError("cells/flats belong to different arrangements")

    def cell_leq(self, c: Cell, d: Cell) -> bool:
        """C <= D iff D lies in the closure of C."""
        self._check(c, d)
        return all(sd == 0 or sd == sc for sc, sd in zip(c.signs, d.signs))

    def cell_leq_flat(self, c: Cell, f: Flat) -> bool:
        """C <= F iff F is contained in <C>."""
        self._check(c, f)
        return c.zero_set() <= f.vanishing

    def flat_leq(self, f: Flat, g: Flat) -> bool:
        """F <= G iff G is contained in F."""
        self._check(f, g)
        return f.vanishing <= g.vanishing

    def tits(self, c: Cell, d: Cell) -> Cell:
        """C o D: signs of C, with the zeros of C filled in from D."""
        self._check(c, d)
        signs = tuple(sc if sc else sd for sc, sd in zip(c.signs, d.signs))
        if signs == c.signs:
            return c
        hit = self._tits.get(signs)
        if hit is not None:
            return hit
        lam = [Fraction(v) for v in c.witness]
        mu = [Fraction(v) for v in d.witness]
        # step from lambda towards mu, stopping before any nonzero sign of C flips
        eps = Fraction(1, 2)
        for a in self.normals:
            x, y = linalg.dot(a, lam), linalg.dot(a, mu)
            if x * y < 0:
                eps = min(eps, x / (x - y) / 2)
        pt = [l + eps * (m - l) for l, m in zip(lam, mu)]
        out = self.cell_of(linalg.primitive(pt))
        if out.signs != signs:
            raise RuntimeError("Tits product witness does not realize the sign rule")
        self._tits[signs] = out
        return out

    def closure_cells(self, c: Cell) -> list[Cell]:
        return [d for d in self.cells() if self.cell_leq(c, d)]


@lru_cache(maxsize=64)
def arrangement_of(spec) -> Arrangement:
    return Arrangement.from_spec(spec)
