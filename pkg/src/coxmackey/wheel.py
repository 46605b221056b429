"""Wheel-relation test for cotangent representations with an auxiliary torus.

For a block V_i of V with dual block V_i^* in V + V*, every pair of weights
w1 of V_i and w2 of V_i^* whose T-parts add up to a root gives a
codimension-two subspace {w1 = 0, w2 = 0}.  A polynomial passes when it
vanishes identically on each of these subspaces.  Pairs whose T-parts add up
to zero (the Cartan direction) are included unless ``include_cartan=False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .algebra import MVPoly


class WheelShapeError(ValueError):
    pass


@dataclass(frozen=True)
class WheelSubspace:
    w1: tuple
    w2: tuple
    kind: str  # "root" or "cartan"

    def equations(self):
        return (self.w1, self.w2)

    def describe(self, r):
        from .algebra import format_poly
        m = len(self.w1) - r
        return (f"{format_poly(MVPoly.linear(self.w1, r, m))} = "
                f"{format_poly(MVPoly.linear(self.w2, r, m))} = 0  [{self.kind}]")


@dataclass
class WheelResult:
    passed: bool
    checked: list = field(default_factory=list)
    failing: list = field(default_factory=list)

    @property
    def root_count(self):
        return sum(1 for s in self.checked if s.kind == "root")

    @property
    def cartan_count(self):
        return sum(1 for s in self.checked if s.kind == "cartan")


def _block_character(spec, block):
    chars = {w.vector[spec.r:] for w in spec.v_weights if w.block == block}
    if len(chars) != 1:
        raise WheelShapeError(f"block {block} is not acted on by a single auxiliary character")
    return chars.pop()


def wheel_subspaces(spec, include_cartan=True) -> list[WheelSubspace]:
    if not spec.cotangent_pairs:
        raise WheelShapeError("spec has no cotangent block pairs (build it with cotangent())")
    if spec.m == 0:
        raise WheelShapeError("spec has no auxiliary torus (use attach_aux_torus())")
    roots = {a.vector[:spec.r] for a in spec.g_roots}
    chi = None
    out = []
    seen = set()
    for i, j in spec.cotangent_pairs:
        total = tuple(a + b for a, b in zip(_block_character(spec, i), _block_character(spec, j)))
        if chi is None:
            chi = total
        elif total != chi:
            raise WheelShapeError("dual block characters do not add up to one common character")
        for w1 in (w for w in spec.v_weights if w.block == i):
            for w2 in (w for w in spec.v_weights if w.block == j):
                t1, t2 = w1.vector[:spec.r], w2.vector[:spec.r]
                s = tuple(a + b for a, b in zip(t1, t2))
                if s in roots:
                    kind = "root"
                elif include_cartan and not any(s) and any(t1):
                    kind = "cartan"
                else:
                    continue
                key = (w1.vector, w2.vector)
                if key not in seen:
                    seen.add(key)
                    out.append(WheelSubspace(w1.vector, w2.vector, kind))
    return out


def restrict_to_subspace(p: MVPoly, equations) -> MVPoly:
    """p with the pivot variables of the linear equations eliminated."""
    n = p.nvars
    rows = [list(e) + [0] * (n - len(e)) for e in equations]
    m, piv = linalg.rref(rows)
    images = {}
    for row, pc in zip(m, piv):
        # x_pc = -sum_{j != pc} row[j] x_j
        images[pc] = MVPoly.linear([-v if j != pc else 0 for j, v in enumerate(row)], p.nx, p.nt)
    return p.substitute(images)


def wheel_predicate(spec, p: MVPoly, include_cartan=True) -> WheelResult:
    if p.nx != spec.r:
        raise WheelShapeError(f"polynomial has {p.nx} x-variables, spec has rank {spec.r}")
    if p.nt < spec.m:
        p = p.padded(spec.m)
    subs = wheel_subspaces(spec, include_cartan)
    failing = [s for s in subs if not restrict_to_subspace(p, s.equations()).is_zero()]
    return WheelResult(not failing, subs, failing)


def random_subspace_point(equations, n, rng, bound=50):
    """A random rational point of {e = 0 for e in equations} in Q^n."""
    basis = linalg.nullspace([list(e) for e in equations], n)
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in basis]
    return [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(n)]
