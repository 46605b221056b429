"""Weyl group actions on cells and flats, flat stabilizers, double-coset bijection."""

from __future__ import annotations

from .arrangement import Cell, Flat, arrangement_of
from .weyl import Subgroup, WeylElement, coset_reps, double_coset_reps


class StabilizerMismatch(RuntimeError):
    pass


_cache = {}


def full_group(spec) -> Subgroup:
    key = ("W", spec)
    if key not in _cache:
        _cache[key] = Subgroup(spec.weyl, spec.r)
    return _cache[key]


def act_on_cell(w: WeylElement, c: Cell) -> Cell:
    """w.C, realized by the mapped witness; sign of alpha on w.C is that of w^-1 alpha on C."""
    if w.is_identity():
        return c
    arr = c.arr
    key = ("cell", arr.normals, w, c.signs)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    out = arr.cell_of(w.act_on_cocharacter(c.witness))
    wi = w.inverse()
    for a, s in zip(arr.normals, out.signs):
        if c.sign_of(wi.act_on_character(a)) != s:
            raise RuntimeError(f"{w} does not permute the hyperplanes of the arrangement")
    _cache[key] = out
    return out


def act_on_flat(w: WeylElement, f: Flat) -> Flat:
    if w.is_identity():
        return f
    arr = f.arr
    basis = [w.act_on_cocharacter(b) for b in f.basis]
    g = arr.flat_of_subspace(basis)
    if g.dim != f.dim:
        raise RuntimeError(f"{w} does not map flats to flats")
    return g


def _fixes(w: WeylElement, lam):
    return tuple(w.act_on_cocharacter(lam)) == tuple(lam)


def stabilizer_of_flat(spec, f: Flat) -> Subgroup:
    """W^F: the stabilizer of a generic point of F, checked against the pointwise stabilizer."""
    key = ("stab", spec, f.vanishing)
    if key in _cache:
        return _cache[key]
    arr = f.arr
    lam = arr.generic_point(f)
    generic = [w for w in spec.weyl if _fixes(w, lam)]
    pointwise = [w for w in spec.weyl if all(_fixes(w, b) for b in f.basis)]
    if generic != pointwise:
        raise StabilizerMismatch(
            f"stabilizer of generic point {lam} ({len(generic)} elements) differs from the "
            f"pointwise stabilizer of {f} ({len(pointwise)} elements)")
    h = Subgroup(generic, spec.r)
    _cache[key] = h
    return h


def stabilizer_of_cell_span(spec, c: Cell) -> Subgroup:
    return stabilizer_of_flat(spec, c.arr.span_flat(c))


def verify_double_coset_bijection(spec, c: Cell, c2: Cell, f: Flat) -> bool:
    """Check that (w, w') -> w'w W^<C> is a bijection

        disjoint union over w in W^<C'>\\W^F/W^<C> of W^<C'>/W^<C' o wC>  -->  W^F/W^<C>

    including that W^<C' o wC> sits inside W^<C'> and that the image does not
    depend on the lift w' of a coset.
    """
    arr = arrangement_of(spec)
    if not (arr.cell_leq_flat(c, f) and arr.cell_leq_flat(c2, f)):
        raise ValueError("need C <= F and C' <= F")
    wf = stabilizer_of_flat(spec, f)
    wc = stabilizer_of_cell_span(spec, c)
    wc2 = stabilizer_of_cell_span(spec, c2)
    target = {}
    for x in wf:
        target[x] = frozenset(x * h for h in wc)
    cosets = set(target.values())
    images = []
    for w in double_coset_reps(wc2, wf, wc):
        d = act_on_cell(w, c)
        prod = arr.tits(c2, d)
        wprod = stabilizer_of_cell_span(spec, prod)
        if not wprod.issubset(wc2):
            return False
        if wprod != wc2.intersection(stabilizer_of_cell_span(spec, d)):
            return False
        for w2 in coset_reps(wprod, wc2):
            img = target[w2 * w]
            for h in wprod:
                if target[w2 * h * w] != img:
                    return False
            images.append(img)
    return len(images) == len(set(images)) and set(images) == cosets
