"""Euler classes, induction kernels and the induction/restriction/braiding operators.

All operators act on :class:`ModuleElement` values: a rational function
together with the flat it lives over, its invariance group W^F and the set of
weights allowed in its denominator.  Cells may be given as ``Cell`` objects or
as cocharacters; flats as ``Flat`` objects, cells (meaning their span) or
cocharacters (meaning the span of their cell).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .algebra import MVPoly, RatFunc, to_ratfunc
from .arrangement import Cell, Flat, arrangement_of
from .parabolic import (act_on_cell, act_on_flat, full_group, stabilizer_of_cell_span,
                        stabilizer_of_flat)
from .weyl import Subgroup, WeylElement, coset_reps, double_coset, double_coset_reps


class PreconditionError(ValueError):
    """Operator called outside its domain (e.g. C not below F)."""


class InvarianceError(RuntimeError):
    """A value failed its invariance or localization check."""


# ---------------------------------------------------------------------------
# addressing cells and flats


def as_cell(spec, c) -> Cell:
    arr = arrangement_of(spec)
    if isinstance(c, Cell):
        if c.arr.normals != arr.normals:
            raise PreconditionError("cell belongs to another arrangement")
        return c
    return arr.cell_of(tuple(c))


def as_flat(spec, f) -> Flat:
    arr = arrangement_of(spec)
    if isinstance(f, Flat):
        return f
    if isinstance(f, Cell):
        return arr.span_flat(f)
    if f is None:
        return arr.origin_flat()
    return arr.flat_of_cocharacter(tuple(f))


def span(spec, c) -> Flat:
    return arrangement_of(spec).span_flat(as_cell(spec, c))


def _require_below(spec, c: Cell, f: Flat):
    if not arrangement_of(spec).cell_leq_flat(c, f):
        raise PreconditionError(f"{c} is not below {f}: F must lie in the span of C")


# ---------------------------------------------------------------------------
# Euler classes and kernels


@lru_cache(maxsize=None)
def weight_poly(vec, r, m) -> MVPoly:
    return MVPoly.linear(vec, r, m)


def euler_weights(spec, part, c, f) -> Counter:
    """Weights of V (part='V') or g (part='g') negative on C and vanishing on F."""
    c, f = as_cell(spec, c), as_flat(spec, f)
    _require_below(spec, c, f)
    if part in ("V", "v"):
        weights = spec.v_weights
    elif part in ("g", "G"):
        weights = spec.g_roots
    else:
        raise ValueError(f"part must be 'V' or 'g', got {part!r}")
    out = Counter()
    for w in weights:
        if c.sign_of(w.vector) < 0 and f.vanishes(w.vector):
            out[w.vector] += w.mult
    return out


def euler_class(spec, part, c, f) -> MVPoly:
    p = MVPoly.one(spec.r, spec.m)
    for vec, k in sorted(euler_weights(spec, part, c, f).items()):
        p = p * weight_poly(vec, spec.r, spec.m) ** k
    return p


_kernel_cache = {}


def kernel(spec, c, f) -> RatFunc:
    """k_{C,F} = Eu_V(C,F) / Eu_g(C,F)."""
    c, f = as_cell(spec, c), as_flat(spec, f)
    key = (spec, c.signs, f.vanishing)
    if key not in _kernel_cache:
        _require_below(spec, c, f)
        _kernel_cache[key] = RatFunc(euler_class(spec, "V", c, f), euler_class(spec, "g", c, f))
    return _kernel_cache[key]


_braiding_cache = {}


def braiding(spec, c, c2, f=None) -> RatFunc:
    """tau_{C,F}^{C',F} = k_{C,F} / k_{C',F}; needs <C> = <C'>."""
    c, c2, f = as_cell(spec, c), as_cell(spec, c2), as_flat(spec, f)
    key = (spec, c.signs, c2.signs, f.vanishing)
    if key not in _braiding_cache:
        if c.zero_set() != c2.zero_set():
            raise PreconditionError(f"braiding needs cells with equal spans, got {c} and {c2}")
        _braiding_cache[key] = kernel(spec, c, f) / kernel(spec, c2, f)
    return _braiding_cache[key]


# ---------------------------------------------------------------------------
# module elements


def _orbit_closure(group: Subgroup, support):
    out = set()
    for vec in support:
        for g in group:
            out.add(g.act_on_character(vec))
    return frozenset(out)


def _stable(group: Subgroup, support):
    return all(g.act_on_character(v) in support for g in group.generators() for v in support)


def _divides_support_product(spec, den: MVPoly, support) -> bool:
    if den.is_constant():
        return True
    polys = [weight_poly(v, spec.r, spec.m) for v in sorted(support)]
    progress = True
    while progress and not den.is_constant():
        progress = False
        for p in polys:
            if p.total_degree() <= den.total_degree() and p.divides(den):
                den = den.divexact(p)
                progress = True
    return den.is_constant()


@dataclass(frozen=True)
class ModuleElement:
    """Element of the (localized) W^F-invariants attached to a flat F."""

    value: RatFunc
    flat: Flat
    group: Subgroup
    support: frozenset = frozenset()

    def is_invariant(self):
        return all(g.act(self.value) == self.value for g in self.group.generators())

    def denominator_ok(self, spec):
        return _divides_support_product(spec, self.value.den, self.support)

    def check(self, spec, what="value", exc=InvarianceError):
        if not self.is_invariant():
            raise exc(f"{what} is not invariant under W^F (order {len(self.group)})")
        if not self.denominator_ok(spec):
            raise exc(f"{what} has a denominator outside its localization: {self.value}")
        return self

    def __str__(self):
        return str(self.value)


def _infer_support(spec, value: RatFunc):
    vs = {w.vector for w in spec.v_weights if any(w.vector[:spec.r])}
    return frozenset(v for v in vs if weight_poly(v, spec.r, spec.m).divides(value.den)) \
        if not value.den.is_constant() else frozenset()


def element(spec, value, flat, support=None, check=True) -> ModuleElement:
    """Wrap a polynomial / rational function as an element over ``flat``."""
    f = as_flat(spec, flat)
    v = to_ratfunc(value, spec.r, spec.m)
    if v.nx != spec.r:
        raise PreconditionError(f"value has {v.nx} x-variables, spec has rank {spec.r}")
    group = stabilizer_of_flat(spec, f)
    if support is None:
        support = _orbit_closure(group, _infer_support(spec, v))
    el = ModuleElement(v, f, group, frozenset(support))
    if check:
        el.check(spec, "input", PreconditionError)
    return el


def _coerce_input(spec, value, flat, check):
    if isinstance(value, ModuleElement):
        if value.flat != flat:
            raise PreconditionError(f"input lives over {value.flat}, expected {flat}")
        if check:
            value.check(spec, "input", PreconditionError)
        return value
    return element(spec, value, flat, check=check)


def act(spec, w: WeylElement, el: ModuleElement) -> ModuleElement:
    """w . f, living over w.F."""
    f2 = act_on_flat(w, el.flat)
    return ModuleElement(w.act(el.value), f2, stabilizer_of_flat(spec, f2),
                         frozenset(w.act_on_character(v) for v in el.support))


# ---------------------------------------------------------------------------
# operators


def induct(spec, c, f, x, check=True) -> ModuleElement:
    """Ind_C^F(x) = sum over w in W^F/W^<C> of w.(x k_{C,F})."""
    c, f = as_cell(spec, c), as_flat(spec, f)
    _require_below(spec, c, f)
    home = arrangement_of(spec).span_flat(c)
    x = _coerce_input(spec, x, home, check)
    wc, wf = x.group, stabilizer_of_flat(spec, f)
    if check and not _stable(wc, x.support):
        raise InvarianceError("denominator support of the input is not W^<C>-stable")
    g = x.value * kernel(spec, c, f)
    reps = coset_reps(wc, wf)
    terms = [w.act(g) for w in reps]
    total = _sum(terms, spec)
    out = ModuleElement(total, f, wf, _orbit_closure(wf, x.support))
    if check:
        out.check(spec, "induction output")
        if x.value.is_polynomial() and not total.is_polynomial():
            raise InvarianceError("induction of a polynomial is not a polynomial")
    return out


def restrict(spec, f, c, x, check=True) -> ModuleElement:
    """Res_F^C(x) = x / k_{C,F}, localized at the weights of Eu_V(C,F)."""
    c, f = as_cell(spec, c), as_flat(spec, f)
    _require_below(spec, c, f)
    x = _coerce_input(spec, x, f, check)
    home = arrangement_of(spec).span_flat(c)
    support = x.support | frozenset(euler_weights(spec, "V", c, f))
    out = ModuleElement(x.value / kernel(spec, c, f), home, stabilizer_of_flat(spec, home), support)
    if check:
        out.check(spec, "restriction output")
    return out


def apply_braiding(spec, c, c2, f, x, check=True) -> ModuleElement:
    """Multiply by tau_{C,F}^{C',F}; x lives over <C> = <C'>."""
    c, c2, f = as_cell(spec, c), as_cell(spec, c2), as_flat(spec, f)
    _require_below(spec, c, f)
    _require_below(spec, c2, f)
    tau = braiding(spec, c, c2, f)
    home = arrangement_of(spec).span_flat(c)
    x = _coerce_input(spec, x, home, check)
    support = x.support | frozenset(euler_weights(spec, "V", c2, f))
    out = ModuleElement(x.value * tau, home, x.group, support)
    if check:
        out.check(spec, "braiding output")
    return out


def _sum(values, spec):
    # adding in a balanced tree keeps intermediate denominators small
    vals = list(values)
    if not vals:
        return RatFunc.zero(spec.r, spec.m)
    while len(vals) > 1:
        nxt = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


# ---------------------------------------------------------------------------
# Mackey formula


def mackey_lhs(spec, c, c2, f, x, check=True) -> ModuleElement:
    """Res_F^{C'} o Ind_C^F applied to x."""
    c, c2, f = as_cell(spec, c), as_cell(spec, c2), as_flat(spec, f)
    _require_below(spec, c, f)
    _require_below(spec, c2, f)
    return restrict(spec, f, c2, induct(spec, c, f, x, check), check)


_double_coset_cache = {}


def mackey_double_cosets(spec, c, c2, f):
    """Canonical representatives of W^<C'> \\ W^F / W^<C>."""
    c, c2, f = as_cell(spec, c), as_cell(spec, c2), as_flat(spec, f)
    key = (spec, c.zero_set(), c2.zero_set(), f.vanishing)
    if key not in _double_coset_cache:
        _double_coset_cache[key] = double_coset_reps(
            stabilizer_of_cell_span(spec, c2), stabilizer_of_flat(spec, f),
            stabilizer_of_cell_span(spec, c))
    return list(_double_coset_cache[key])


@dataclass
class MackeyTerm:
    rep: WeylElement
    moved: Cell          # w.C
    inner: Cell          # w.C o C'
    outer: Cell          # C' o w.C
    value: ModuleElement


def mackey_terms(spec, c, c2, f, x, reps=None, check=True) -> list[MackeyTerm]:
    """Per double coset w: Ind_{C' o wC}^{<C'>} tau_{wC o C'}^{C' o wC} Res_{<wC>}^{wC o C'} (w.x)."""
    arr = arrangement_of(spec)
    c, c2, f = as_cell(spec, c), as_cell(spec, c2), as_flat(spec, f)
    _require_below(spec, c, f)
    _require_below(spec, c2, f)
    x = _coerce_input(spec, x, arr.span_flat(c), check)
    canon = mackey_double_cosets(spec, c, c2, f)
    if reps is None:
        reps = canon
    else:
        wc2, wf, wc = (stabilizer_of_cell_span(spec, c2), stabilizer_of_flat(spec, f),
                       stabilizer_of_cell_span(spec, c))
        if len(reps) != len(canon) or any(
                w not in double_coset(wc2, r, wc) for w, r in zip(reps, canon)) \
                or any(w not in wf for w in reps):
            raise PreconditionError("alternate representatives must match the canonical double cosets")
    out = []
    for w in reps:
        d = act_on_cell(w, c)
        inner = arr.tits(d, c2)
        outer = arr.tits(c2, d)
        y = act(spec, w, x)
        y = restrict(spec, arr.span_flat(d), inner, y, check)
        y = apply_braiding(spec, inner, outer, f, y, check)
        y = induct(spec, outer, arr.span_flat(c2), y, check)
        out.append(MackeyTerm(w, d, inner, outer, y))
    return out


def mackey_rhs(spec, c, c2, f, x, reps=None, check=True) -> ModuleElement:
    terms = mackey_terms(spec, c, c2, f, x, reps, check)
    home = span(spec, c2)
    total = _sum([t.value.value for t in terms], spec)
    support = frozenset().union(*(t.value.support for t in terms)) if terms else frozenset()
    return ModuleElement(total, home, stabilizer_of_flat(spec, home), support)


def mackey_check(spec, c, c2, f, x, check=True) -> bool:
    return mackey_lhs(spec, c, c2, f, x, check).value == mackey_rhs(spec, c, c2, f, x, None, check).value


def assoc_check(spec, c, c2, f, x, check=True) -> bool:
    """Ind_C^F = Ind_{C'}^F o Ind_C^{<C'>} for C <= C' <= F."""
    arr = arrangement_of(spec)
    c, c2, f = as_cell(spec, c), as_cell(spec, c2), as_flat(spec, f)
    if not arr.cell_leq(c, c2):
        raise PreconditionError(f"need {c} <= {c2}")
    _require_below(spec, c2, f)
    lhs = induct(spec, c, f, x, check)
    mid = induct(spec, c, arr.span_flat(c2), x, check)
    return lhs.value == induct(spec, c2, f, mid, check).value


def coassoc_check(spec, c, c2, f, x, check=True) -> bool:
    """Res_F^C = Res_{<C'>}^C o Res_F^{C'} for C <= C' <= F."""
    arr = arrangement_of(spec)
    c, c2, f = as_cell(spec, c), as_cell(spec, c2), as_flat(spec, f)
    if not arr.cell_leq(c, c2):
        raise PreconditionError(f"need {c} <= {c2}")
    _require_below(spec, c2, f)
    lhs = restrict(spec, f, c, x, check)
    mid = restrict(spec, f, c2, x, check)
    return lhs.value == restrict(spec, arr.span_flat(c2), c, mid, check).value


# ---------------------------------------------------------------------------
# degrees


@dataclass(frozen=True)
class DegreeData:
    d_F: int
    d_C: int
    d_CF: int

    @property
    def shift(self):
        """d_F - d_<C> - 2 d_{C,F}; zero for weakly symmetric V."""
        return self.d_F - self.d_C - 2 * self.d_CF


def _d_flat(spec, f: Flat):
    dim_v = sum(w.mult for w in spec.v_weights if f.vanishes(w.vector))
    dim_g = spec.r + sum(1 for a in spec.g_roots if f.vanishes(a.vector))
    return dim_v - dim_g


def degree_shift(spec, c, f) -> DegreeData:
    c, f = as_cell(spec, c), as_flat(spec, f)
    _require_below(spec, c, f)
    d_cf = sum(euler_weights(spec, "V", c, f).values()) - sum(euler_weights(spec, "g", c, f).values())
    return DegreeData(_d_flat(spec, f), _d_flat(spec, span(spec, c)), d_cf)


# ---------------------------------------------------------------------------
# test inputs

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def monomials(nvars, degree):
    """Exponent vectors of all monomials of total degree <= ``degree``."""
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def reynolds(p, group: Subgroup):
    """Average of p over the group."""
    total = p * 0
    for g in group:
        total = total + g.act(p)
    return total * Fraction(1, len(group))


def orbit_sum(p, group: Subgroup):
    """|W| times the Reynolds average; keeps integer coefficients integral."""
    total = p * 0
    for g in group:
        total = total + g.act(p)
    return total


def random_invariant(spec, group: Subgroup, degree=3, rng=None, terms=4) -> MVPoly:
    """Orbit sum of a random combination of monomials with distinct prime coefficients."""
    rng = rng if rng is not None else random.Random(0)
    mons = monomials(spec.r + spec.m, degree)
    picked = rng.sample(mons, min(terms, len(mons)))
    coeffs = rng.sample(PRIMES, len(picked))
    p = MVPoly(spec.r, spec.m, {e: c * rng.choice((1, -1)) for e, c in zip(picked, coeffs)})
    return orbit_sum(p, group)


def generic_polynomial(spec, group: Subgroup | None = None, degree=4) -> MVPoly:
    """sum_e c_e x^e over all monomials of degree <= ``degree``, each c_e a fresh t-variable.

    The Weyl group fixes the c_e, so averaging over ``group`` gives a generic invariant.
    """
    mons = monomials(spec.r + spec.m, degree)
    nt = spec.m + len(mons)
    terms = {}
    for k, e in enumerate(mons):
        c = [0] * len(mons)
        c[k] = 1
        terms[e + tuple(c)] = 1
    p = MVPoly(spec.r, nt, terms)
    return orbit_sum(p, group) if group is not None and len(group) > 1 else p
