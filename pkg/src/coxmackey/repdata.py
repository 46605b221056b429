"""Representation data: weights of V and g, the Weyl group, the torus split.

Characters are integer vectors of length r + m: the first r entries pair with
the maximal torus T (the ``x`` variables), the last m with an auxiliary torus
T' (the ``t`` variables) on which the Weyl group acts trivially.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .linalg import primitive
from .weyl import (WeylElement, block_product, signed_permutation_group,
                   symmetric_group, weyl_closure)


@dataclass(frozen=True)
class Weight:
    vector: tuple
    mult: int = 1
    block: int = 0

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(int(v) for v in self.vector))
        if self.mult < 1:
            raise ValueError(f"weight multiplicity must be positive, got {self.mult}")

    def t_part(self, r):
        return self.vector[:r]

    def negated(self, aux_too=True, r=None):
        if aux_too:
            return Weight(tuple(-v for v in self.vector), self.mult, self.block)
        return Weight(tuple(-v for v in self.vector[:r]) + self.vector[r:], self.mult, self.block)


def weight_counter(weights):
    c = Counter()
    for w in weights:
        c[w.vector] += w.mult
    return c


@dataclass(frozen=True, eq=False)
class RepSpec:
    name: str
    r: int
    m: int
    v_weights: tuple
    g_roots: tuple
    weyl: tuple
    weyl_info: dict = field(default_factory=dict)
    cotangent_pairs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "v_weights", tuple(self.v_weights))
        object.__setattr__(self, "g_roots", tuple(self.g_roots))
        object.__setattr__(self, "weyl", tuple(sorted(self.weyl)))
        object.__setattr__(self, "cotangent_pairs", tuple(sorted(tuple(p) for p in self.cotangent_pairs)))
        self.validate()
        key = (self.r, self.m, frozenset(weight_counter(self.v_weights).items()),
               frozenset(weight_counter(self.g_roots).items()), self.weyl)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __eq__(self, other):
        return isinstance(other, RepSpec) and self._key == other._key

    def __hash__(self):
        return self._hash

    @property
    def n(self):
        return self.r + self.m

    @property
    def blocks(self):
        return sorted({w.block for w in self.v_weights})

    def validate(self):
        n = self.r + self.m
        for w in self.v_weights + self.g_roots:
            if len(w.vector) != n:
                raise ValueError(f"weight {w.vector} should have length {n}")
        for a in self.g_roots:
            if any(a.vector[self.r:]):
                raise ValueError(f"root {a.vector} has a nonzero auxiliary part")
            if not any(a.vector[:self.r]):
                raise ValueError("roots must be nonzero on the maximal torus")
            if a.mult != 1:
                raise ValueError("roots have multiplicity one")
        roots = weight_counter(self.g_roots)
        if roots != Counter({tuple(-v for v in k): c for k, c in roots.items()}):
            raise ValueError("root set is not closed under negation")
        if not self.weyl:
            raise ValueError("the Weyl group must contain the identity")
        group = set(self.weyl)
        if WeylElement.identity(self.r) not in group:
            raise ValueError("the Weyl group must contain the identity")
        for g in self.weyl:
            if g.rank != self.r:
                raise ValueError("Weyl group element of the wrong size")
        for a in self.weyl:
            for b in self.weyl:
                if a * b not in group:
                    raise ValueError("the Weyl group is not closed under products")
        vw = weight_counter(self.v_weights)
        for g in self.weyl:
            if Counter({g.act_on_character(k): c for k, c in vw.items()}) != vw:
                raise ValueError(f"{g} does not preserve the weights of V")
            if Counter({g.act_on_character(k): c for k, c in roots.items()}) != roots:
                raise ValueError(f"{g} does not preserve the roots")

    # -- derived data --------------------------------------------------------
    def nonzero_v_weights(self):
        return [w for w in self.v_weights if any(w.vector[:self.r])]

    def dim_v(self):
        return sum(w.mult for w in self.v_weights)

    def summary(self):
        return (f"{self.name}: rank_t={self.r}, rank_aux={self.m}, dim V={self.dim_v()}, "
                f"#roots={len(self.g_roots)}, |W|={len(self.weyl)}")

    def __repr__(self):
        return f"RepSpec({self.name!r}, r={self.r}, m={self.m})"


# ---------------------------------------------------------------------------
# constructors


def _gl_roots(n, m=0):
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * (n + m)
                v[i], v[j] = 1, -1
                roots.append(Weight(v))
    return roots


def _signed_roots(n, kind):
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * n
                    v[i], v[j] = si, sj
                    roots.append(Weight(v))
        for s in (1, -1):
            v = [0] * n
            v[i] = 2 * s if kind == "sp" else s
            roots.append(Weight(v))
    return roots


def rep_gl_standard(n: int) -> RepSpec:
    if n < 1:
        raise ValueError("GL_n needs n >= 1")
    weights = [Weight([1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return RepSpec(f"gl{n}-standard", n, 0, weights, _gl_roots(n), symmetric_group(n),
                   {"type": "gl", "n": n})


def rep_torus(weights, r=None, name="torus") -> RepSpec:
    """Torus of rank r acting with the given characters (trivial Weyl group)."""
    ws = [w if isinstance(w, Weight) else Weight(w) for w in weights]
    if r is None:
        if not ws:
            raise ValueError("rank needed when there are no weights")
        r = len(ws[0].vector)
    return RepSpec(name, r, 0, ws, (), [WeylElement.identity(r)], {"type": "torus"})


def rep_signed(n: int, kind="sp", weights=None) -> RepSpec:
    """Sp_{2n} or SO_{2n+1} with the given V-weights (standard rep by default)."""
    if kind not in ("sp", "so-odd"):
        raise ValueError(f"unknown signed type {kind}")
    if weights is None:
        weights = []
        for i in range(n):
            for s in (1, -1):
                v = [0] * n
                v[i] = s
                weights.append(Weight(v))
        if kind == "so-odd":
            weights.append(Weight([0] * n))
    return RepSpec(f"{kind}{2 * n if kind == 'sp' else 2 * n + 1}-standard", n, 0, weights,
                   _signed_roots(n, kind), signed_permutation_group(n), {"type": "signed", "kind": kind})


def _retag(spec, **kw):
    data = dict(name=spec.name, r=spec.r, m=spec.m, v_weights=spec.v_weights,
                g_roots=spec.g_roots, weyl=spec.weyl, weyl_info=spec.weyl_info,
                cotangent_pairs=spec.cotangent_pairs)
    data.update(kw)
    return RepSpec(**data)


def dual(spec: RepSpec, aux_too=True) -> RepSpec:
    ws = [w.negated(aux_too, spec.r) for w in spec.v_weights]
    name = spec.name[:-5] if spec.name.endswith("-dual") else spec.name + "-dual"
    return _retag(spec, name=name, v_weights=ws)


def _same_group(a: RepSpec, b: RepSpec):
    if a.r != b.r or a.m != b.m:
        raise ValueError(f"rank mismatch: ({a.r},{a.m}) vs ({b.r},{b.m})")
    if set(a.weyl) != set(b.weyl) or weight_counter(a.g_roots) != weight_counter(b.g_roots):
        raise ValueError("direct sum needs identical group data")


def direct_sum(a: RepSpec, b: RepSpec, name=None) -> RepSpec:
    _same_group(a, b)
    shift = max(a.blocks, default=-1) + 1
    ws = list(a.v_weights) + [Weight(w.vector, w.mult, w.block + shift) for w in b.v_weights]
    pairs = list(a.cotangent_pairs) + [(i + shift, j + shift) for i, j in b.cotangent_pairs]
    return _retag(a, name=name or f"{a.name}+{b.name}", v_weights=ws, cotangent_pairs=pairs)


def adjoint(spec: RepSpec) -> RepSpec:
    """V := g, i.e. the roots together with r zero weights (the Cartan)."""
    ws = [Weight(a.vector) for a in spec.g_roots]
    if spec.r:
        ws.append(Weight((0,) * spec.n, spec.r))
    return _retag(spec, name=f"{spec.name.split('-')[0]}-adjoint", v_weights=ws, cotangent_pairs=())


def cotangent(spec: RepSpec) -> RepSpec:
    """V + V*, remembering which block of V* is dual to which block of V."""
    blocks = spec.blocks
    shift = max(blocks, default=-1) + 1
    ws = list(spec.v_weights) + [Weight(tuple(-v for v in w.vector), w.mult, w.block + shift)
                                 for w in spec.v_weights]
    pairs = [(b, b + shift) for b in blocks]
    return _retag(spec, name=f"T*{spec.name}", v_weights=ws, cotangent_pairs=pairs)


def attach_aux_torus(spec: RepSpec, characters) -> RepSpec:
    """Let an extra torus act on block b of V by ``characters[b]``.

    ``characters`` is a list (indexed by block) or a dict block -> vector; all
    vectors share one length k, which is appended to the auxiliary block.
    """
    if isinstance(characters, dict):
        chars = {int(b): tuple(v) for b, v in characters.items()}
    else:
        chars = {b: tuple(v) for b, v in zip(spec.blocks, characters)}
    if set(chars) != set(spec.blocks):
        raise ValueError(f"need one character per block {spec.blocks}")
    lens = {len(v) for v in chars.values()}
    if len(lens) != 1:
        raise ValueError("auxiliary characters must share a length")
    k = lens.pop()
    ws = [Weight(w.vector + chars[w.block], w.mult, w.block) for w in spec.v_weights]
    roots = [Weight(a.vector + (0,) * k) for a in spec.g_roots]
    return _retag(spec, name=spec.name, m=spec.m + k, v_weights=ws, g_roots=roots)


def is_weakly_symmetric(spec: RepSpec) -> bool:
    """Ray classes of the T-parts of V's weights agree with those of V*."""
    plus, minus = Counter(), Counter()
    for w in spec.v_weights:
        t = w.vector[:spec.r]
        if any(t):
            plus[primitive(t)] += w.mult
            minus[primitive([-v for v in t])] += w.mult
    return plus == minus


# ---------------------------------------------------------------------------
# files


def _weyl_from_json(obj, r):
    kind = obj.get("type", "custom")
    if kind in ("gl", "sl"):
        return symmetric_group(r)
    if kind in ("signed", "sp", "so-odd"):
        return signed_permutation_group(r)
    if kind == "torus":
        return [WeylElement.identity(r)]
    if kind == "custom":
        return weyl_closure(obj.get("generators", []), rank=r)
    if kind == "product":
        parts = []
        for part in obj["factors"]:
            pr = part["rank"]
            parts.append((_weyl_from_json(part, pr), pr))
        if sum(pr for _, pr in parts) != r:
            raise ValueError("product factor ranks must sum to rank_t")
        return block_product(parts)
    raise ValueError(f"unknown Weyl group type {kind!r}")


def _check_vector(v, n, what):
    if not isinstance(v, list) or len(v) != n or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ValueError(f"{what} must be an integer array of length {n}, got {v!r}")
    return v


def spec_from_json(obj) -> RepSpec:
    if not isinstance(obj, dict):
        raise ValueError("spec must be a JSON object")
    for key in ("rank_t", "v_weights", "g_roots", "weyl"):
        if key not in obj:
            raise ValueError(f"spec is missing {key!r}")
    r = obj["rank_t"]
    m = obj.get("rank_aux", 0)
    if not isinstance(r, int) or not isinstance(m, int) or r < 0 or m < 0:
        raise ValueError("rank_t and rank_aux must be non-negative integers")
    n = r + m
    blocks = obj.get("blocks")
    ws = []
    for i, entry in enumerate(obj["v_weights"]):
        if not isinstance(entry, list) or len(entry) != 2:
            raise ValueError(f"v_weights[{i}] must be [vector, multiplicity]")
        vec, mult = entry
        _check_vector(vec, n, f"v_weights[{i}]")
        if not isinstance(mult, int) or mult < 1:
            raise ValueError(f"v_weights[{i}] multiplicity must be a positive integer")
        ws.append(Weight(vec, mult, blocks[i] if blocks else 0))
    gr = obj["g_roots"]
    if isinstance(gr, dict):
        if gr.get("type") != "gl":
            raise ValueError("only {'type': 'gl'} root shorthand is supported")
        k = gr.get("n", r)
        if k != r:
            raise ValueError("gl root shorthand needs n = rank_t")
        roots = _gl_roots(r, m)
    else:
        roots = []
        for i, entry in enumerate(gr):
            vec = entry[0] if entry and isinstance(entry[0], list) else entry
            _check_vector(vec, n, f"g_roots[{i}]")
            roots.append(Weight(vec))
    weyl = obj["weyl"]
    if not isinstance(weyl, dict):
        raise ValueError("weyl must be an object")
    elems = _weyl_from_json(weyl, r)
    pairs = obj.get("cotangent_pairs", [])
    return RepSpec(obj.get("name", "spec"), r, m, ws, roots, elems, dict(weyl), pairs)


def spec_to_json(spec: RepSpec) -> dict:
    info = dict(spec.weyl_info) if spec.weyl_info else {}
    if info.get("type") not in ("gl", "sl", "signed", "sp", "so-odd", "torus", "product", "custom"):
        info = {"type": "custom"}
    if info["type"] == "custom":
        from .weyl import Subgroup
        info["generators"] = [[list(row) for row in g.matrix] for g in Subgroup(spec.weyl).generators()]
    obj = {
        "name": spec.name,
        "rank_t": spec.r,
        "rank_aux": spec.m,
        "v_weights": [[list(w.vector), w.mult] for w in spec.v_weights],
        "g_roots": [[list(a.vector)] for a in spec.g_roots],
        "weyl": info,
    }
    if any(w.block for w in spec.v_weights):
        obj["blocks"] = [w.block for w in spec.v_weights]
    if spec.cotangent_pairs:
        obj["cotangent_pairs"] = [list(p) for p in spec.cotangent_pairs]
    return obj


def load_spec(path) -> RepSpec:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: not valid JSON ({e})") from None
    return spec_from_json(obj)


def save_spec(spec: RepSpec, path):
    with open(path, "w") as fh:
        json.dump(spec_to_json(spec), fh, indent=1)
        fh.write("\n")


BUILTIN = {
    "gl1": lambda: rep_gl_standard(1),
    "gl2": lambda: rep_gl_standard(2),
    "gl3": lambda: rep_gl_standard(3),
    "gl2-adjoint": lambda: adjoint(rep_gl_standard(2)),
    "gl3-adjoint": lambda: adjoint(rep_gl_standard(3)),
    "T*gl1": lambda: cotangent(rep_gl_standard(1)),
    "T*gl2": lambda: cotangent(rep_gl_standard(2)),
    "T*gl1-aux": lambda: attach_aux_torus(cotangent(rep_gl_standard(1)), [(1, 0), (0, 1)]),
    "T*gl2-aux": lambda: attach_aux_torus(cotangent(rep_gl_standard(2)), [(1, 0), (0, 1)]),
}


def resolve_spec(name_or_path) -> RepSpec:
    """A built-in spec name (see ``BUILTIN``) or a path to a JSON spec file."""
    if name_or_path in BUILTIN:
        return BUILTIN[name_or_path]()
    return load_spec(name_or_path)
