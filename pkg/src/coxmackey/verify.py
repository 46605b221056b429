"""Batch verification of the operator identities over a whole arrangement."""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arrangement import arrangement_of
from .operators import (assoc_check, coassoc_check, degree_shift, induct, kernel, mackey_terms,
                        random_invariant, restrict)
from .parabolic import (act_on_cell, act_on_flat, stabilizer_of_cell_span, stabilizer_of_flat,
                        verify_double_coset_bijection)
from .repdata import is_weakly_symmetric, spec_from_json, spec_to_json

WORKERS_ENV = "COXMACKEY_WORKERS"
TITS_TRIPLE_CAP = 10**6


@dataclass
class VerifyReport:
    spec_name: str
    counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    duration: float = 0.0

    def record(self, prop, ok, detail=None):
        """Count one instance; ``detail`` is a callable building the counterexample record."""
        c = self.counts.setdefault(prop, [0, 0])
        if ok:
            c[0] += 1
        else:
            c[1] += 1
            self.counterexamples.append({"property": prop, **(detail() if detail else {})})

    def merge(self, other: "VerifyReport"):
        for prop, (p, f) in other.counts.items():
            c = self.counts.setdefault(prop, [0, 0])
            c[0] += p
            c[1] += f
        self.counterexamples.extend(other.counterexamples)
        self.notes.extend(other.notes)

    @property
    def ok(self):
        return not self.counterexamples and all(f == 0 for _, f in self.counts.values())

    def body(self):
        """Report text without the timing line (deterministic for a fixed seed)."""
        lines = [f"spec: {self.spec_name}"]
        for prop in sorted(self.counts):
            p, f = self.counts[prop]
            lines.append(f"  {prop:<24} pass {p:>7}  fail {f:>5}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        for cx in self.counterexamples[:20]:
            lines.append("  counterexample: " + ", ".join(f"{k}={v}" for k, v in cx.items()))
        if len(self.counterexamples) > 20:
            lines.append(f"  ... {len(self.counterexamples) - 20} more counterexamples")
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)

    def to_text(self):
        return self.body() + f"\nduration: {self.duration:.2f}s"

    def to_json(self):
        return json.dumps({
            "spec": self.spec_name,
            "counts": {k: {"pass": v[0], "fail": v[1]} for k, v in sorted(self.counts.items())},
            "counterexamples": self.counterexamples,
            "notes": self.notes,
            "ok": self.ok,
            "duration": round(self.duration, 3),
        }, indent=1, sort_keys=True)


# ---------------------------------------------------------------------------
# enumeration


def mackey_triples(spec):
    """All (C, C', F) with C, C' <= F, ordered by flat, then cells."""
    arr = arrangement_of(spec)
    cells = arr.cells()
    out = []
    for f in arr.flats():
        below = [c for c in cells if arr.cell_leq_flat(c, f)]
        out.extend((c, c2, f) for c in below for c2 in below)
    return out


def chains(spec):
    """All (C, C', F) with C <= C' <= F."""
    arr = arrangement_of(spec)
    cells = arr.cells()
    out = []
    for f in arr.flats():
        below = [c for c in cells if arr.cell_leq_flat(c, f)]
        out.extend((c, c2, f) for c in below for c2 in below if arr.cell_leq(c, c2))
    return out


def _rng(seed, *parts):
    return random.Random(":".join(str(p) for p in (seed,) + parts))


def _label(c):
    return c.label()


# ---------------------------------------------------------------------------
# property runners (each returns a partial report)


def _mackey_for(spec, fi, ci, trials, degree, seed):
    """Mackey checks for one (F, C) and every C'; Ind_C^F is shared across C'."""
    arr = arrangement_of(spec)
    f = arr.flats()[fi]
    c = arr.cells()[ci]
    rep = VerifyReport(spec.name)
    partners = [c2 for c2 in arr.cells() if arr.cell_leq_flat(c2, f)]
    wc = stabilizer_of_cell_span(spec, c)
    single = len(spec.weyl) == 1
    for k in range(trials):
        x = random_invariant(spec, wc, degree, _rng(seed, "mackey", fi, ci, k))
        ind = induct(spec, c, f, x)
        for c2 in partners:
            lhs = restrict(spec, f, c2, ind).value
            terms = mackey_terms(spec, c, c2, f, x)
            rhs = sum((t.value.value for t in terms[1:]), terms[0].value.value) if terms else None
            ok = rhs is not None and lhs == rhs
            rep.record("mackey", ok, lambda: dict(C=_label(c), Cp=_label(c2), F=_label_flat(spec, f),
                                                  f=str(x), lhs=str(lhs), rhs=str(rhs)))
            if single:
                rep.record("torus-single-term", len(terms) == 1,
                           lambda: dict(C=_label(c), Cp=_label(c2), terms=len(terms)))
                k_ratio = kernel(spec, c, f) / kernel(spec, c2, f)
                rep.record("torus-kernel-ratio", lhs == k_ratio * x,
                           lambda: dict(C=_label(c), Cp=_label(c2), lhs=str(lhs)))
    return rep


def _label_flat(spec, f):
    return arrangement_of(spec).cell_of(arrangement_of(spec).generic_point(f)).label()


def _worker(args):
    spec_json, fi, ci, trials, degree, seed = args
    spec = spec_from_json(spec_json)
    return _mackey_for(spec, fi, ci, trials, degree, seed)


def verify_mackey(spec, trials=5, degree=3, seed=0, workers=None, progress=None) -> VerifyReport:
    arr = arrangement_of(spec)
    cells, flats = arr.cells(), arr.flats()
    jobs = [(fi, ci) for fi, f in enumerate(flats) for ci, c in enumerate(cells)
            if arr.cell_leq_flat(c, f)]
    workers = workers or int(os.environ.get(WORKERS_ENV, "1") or 1)
    rep = VerifyReport(spec.name)
    if workers > 1:
        sj = spec_to_json(spec)
        with ProcessPoolExecutor(workers) as ex:
            parts = ex.map(_worker, [(sj, fi, ci, trials, degree, seed) for fi, ci in jobs])
            for part in parts:
                rep.merge(part)
    else:
        for n, (fi, ci) in enumerate(jobs):
            rep.merge(_mackey_for(spec, fi, ci, trials, degree, seed))
            if progress:
                progress(n + 1, len(jobs))
    return rep


def verify_chains(spec, trials=5, degree=3, seed=0) -> VerifyReport:
    arr = arrangement_of(spec)
    rep = VerifyReport(spec.name)
    for n, (c, c2, f) in enumerate(chains(spec)):
        def lab(**extra):
            return lambda: dict(C=_label(c), Cp=_label(c2), F=_label_flat(spec, f),
                                **{k: str(v) for k, v in extra.items()})
        mid = arr.span_flat(c2)
        rep.record("kernel-factorization",
                   kernel(spec, c, f) == kernel(spec, c, mid) * kernel(spec, c2, f), lab())
        wc, wf = stabilizer_of_cell_span(spec, c), stabilizer_of_flat(spec, f)
        for k in range(trials):
            x = random_invariant(spec, wc, degree, _rng(seed, "assoc", n, k))
            rep.record("associativity", assoc_check(spec, c, c2, f, x), lab(f=x))
            y = random_invariant(spec, wf, degree, _rng(seed, "coassoc", n, k))
            rep.record("coassociativity", coassoc_check(spec, c, c2, f, y), lab(f=y))
    return rep


def verify_structure(spec, seed=0) -> VerifyReport:
    """Tits product laws, Weyl equivariance, double-coset bijection, degrees."""
    arr = arrangement_of(spec)
    rep = VerifyReport(spec.name)
    cells = arr.cells()
    group = list(spec.weyl)
    for c in cells:
        for d in cells:
            p = arr.tits(c, d)
            rep.record("tits-below-left", arr.cell_leq(p, c),
                       lambda: dict(C=_label(c), Cp=_label(d), product=_label(p)))
            for w in group:
                rep.record("tits-equivariance",
                           act_on_cell(w, p) == arr.tits(act_on_cell(w, c), act_on_cell(w, d)),
                           lambda: dict(C=_label(c), Cp=_label(d), w=str(w.matrix)))
    n = len(cells)
    if n ** 3 <= TITS_TRIPLE_CAP:
        triples = [(a, b, c) for a in cells for b in cells for c in cells]
    else:
        rng = _rng(seed, "tits-assoc")
        triples = [(rng.choice(cells), rng.choice(cells), rng.choice(cells))
                   for _ in range(TITS_TRIPLE_CAP)]
        rep.notes.append(f"tits associativity sampled on {TITS_TRIPLE_CAP} of {n ** 3} triples")
    for a, b, c in triples:
        rep.record("tits-associativity", arr.tits(arr.tits(a, b), c) == arr.tits(a, arr.tits(b, c)),
                   lambda: dict(C=_label(a), Cp=_label(b), Cpp=_label(c)))
    for f in arr.flats():
        for c in cells:
            if not arr.cell_leq_flat(c, f):
                continue
            for w in group:
                wk = w.act(kernel(spec, c, f))
                rep.record("kernel-equivariance",
                           wk == kernel(spec, act_on_cell(w, c), act_on_flat(w, f)),
                           lambda: dict(C=_label(c), F=_label_flat(spec, f), w=str(w.matrix)))
    for c, c2, f in mackey_triples(spec):
        rep.record("double-coset-bijection", verify_double_coset_bijection(spec, c, c2, f),
                   lambda: dict(C=_label(c), Cp=_label(c2), F=_label_flat(spec, f)))
    shifts = [(c, f, degree_shift(spec, c, f).shift) for f in arr.flats() for c in cells
              if arr.cell_leq_flat(c, f)]
    if is_weakly_symmetric(spec):
        for c, f, s in shifts:
            rep.record("degree-shift-zero", s == 0,
                       lambda: dict(C=_label(c), F=_label_flat(spec, f), shift=s))
    else:
        nonzero = sum(1 for *_, s in shifts if s)
        rep.notes.append(f"not weakly symmetric: {nonzero} of {len(shifts)} (C,F) pairs shift degrees")
    return rep


def run_verify(spec, trials=5, degree=3, seed=0, workers=None, progress=None) -> VerifyReport:
    t0 = time.perf_counter()
    rep = VerifyReport(spec.name)
    rep.merge(verify_structure(spec, seed))
    rep.merge(verify_chains(spec, trials, degree, seed))
    rep.merge(verify_mackey(spec, trials, degree, seed, workers, progress))
    rep.notes = sorted(set(rep.notes))
    rep.duration = time.perf_counter() - t0
    return rep
