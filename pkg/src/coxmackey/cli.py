"""Command-line interface.

Exit codes: 0 all checks pass, 1 a mathematical counterexample was found,
2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from . import operators as ops
from .algebra import ParseError, poly_parse
from .arrangement import arrangement_of
from .parabolic import stabilizer_of_cell_span
from .repdata import BUILTIN, is_weakly_symmetric, resolve_spec
from .verify import VerifyReport, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
COCHAR_OPTS = ("--lambda", "--mu", "--lambdaprime")


class UsageError(Exception):
    pass


def parse_cochar(text, r):
    try:
        vals = tuple(Fraction(v.strip()) for v in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse cocharacter {text!r}; expected a,b,...") from None
    if len(vals) != r:
        raise UsageError(f"cocharacter {text!r} has {len(vals)} entries, the torus has rank {r}")
    return tuple(v.numerator if v.denominator == 1 else v for v in vals)


def _fix_negative_values(argv):
    # let "--lambda -2,-1" through: argparse would read "-2,-1" as an option
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in COCHAR_OPTS and i + 1 < len(argv) and re.match(r"^-\d", argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def _load(args):
    try:
        return resolve_spec(args.spec)
    except FileNotFoundError:
        raise UsageError(f"no such spec file or built-in spec: {args.spec} "
                         f"(built-ins: {', '.join(BUILTIN)})") from None


def _poly(spec, text):
    return poly_parse(text, spec.r, spec.m)


def _emit(args, text, payload):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------


def cmd_info(args):
    spec = _load(args)
    arr = arrangement_of(spec)
    ws = is_weakly_symmetric(spec)
    payload = {"name": spec.name, "rank_t": spec.r, "rank_aux": spec.m, "weyl_order": len(spec.weyl),
               "cells": len(arr.cells()), "flats": len(arr.flats()), "hyperplanes": len(arr.normals),
               "weakly_symmetric": ws}
    text = (f"{spec.name}: rank_t {spec.r}, rank_aux {spec.m}\n"
            f"cells: {payload['cells']}, flats: {payload['flats']}, |W|: {len(spec.weyl)}, "
            f"weakly symmetric: {str(ws).lower()}")
    if args.list:
        lines = [text, "hyperplanes: " + ", ".join(str(a) for a in arr.normals), "cells:"]
        lines += [f"  {c.label():<14} {''.join('+' if s > 0 else '-' if s < 0 else '0' for s in c.signs)}"
                  f"  span dim {arr.span_flat(c).dim}" for c in arr.cells()]
        lines.append("flats:")
        lines += [f"  dim {f.dim}  vanishing {sorted(f.vanishing)}  generic {arr.generic_point(f)}"
                  for f in arr.flats()]
        text = "\n".join(lines)
    _emit(args, text, payload)
    return EXIT_OK


def cmd_query(args):
    spec = _load(args)
    arr = arrangement_of(spec)
    lam = parse_cochar(args.lam, spec.r) if args.lam else None
    mu = parse_cochar(args.mu, spec.r) if args.mu else (0,) * spec.r
    lam2 = parse_cochar(args.lam2, spec.r) if args.lam2 else None
    need = {"kernel": "lam", "induct": "lam", "restrict": "lam", "braid": "lam", "tits": "lam",
            "euler": "lam", "degree": "lam"}
    if need.get(args.what) == "lam" and lam is None:
        raise UsageError(f"{args.what} needs --lambda")
    if args.what == "kernel":
        out = str(ops.kernel(spec, lam, mu))
    elif args.what == "euler":
        out = str(ops.euler_class(spec, args.part, lam, mu))
    elif args.what == "braid":
        if lam2 is None:
            raise UsageError("braid needs --lambdaprime")
        out = str(ops.braiding(spec, lam, lam2, mu))
    elif args.what == "tits":
        if args.mu is None:
            raise UsageError("tits needs --mu (the second cell)")
        p = arr.tits(arr.cell_of(lam), arr.cell_of(mu))
        out = f"{p.label()} {''.join('+' if s > 0 else '-' if s < 0 else '0' for s in p.signs)}"
    elif args.what == "degree":
        d = ops.degree_shift(spec, lam, mu)
        out = f"d_F={d.d_F} d_C={d.d_C} d_CF={d.d_CF} shift={d.shift}"
    elif args.what in ("induct", "restrict"):
        if args.poly is None:
            raise UsageError(f"{args.what} needs --poly")
        f = _poly(spec, args.poly)
        if args.what == "induct":
            out = str(ops.induct(spec, lam, mu, f))
        else:
            out = str(ops.restrict(spec, mu, lam, f))
    else:
        raise UsageError(f"unknown query {args.what}")
    _emit(args, out, {"query": args.what, "result": out})
    return EXIT_OK


def cmd_mackey(args):
    spec = _load(args)
    if not (args.lam and args.lam2):
        raise UsageError("mackey needs --lambda and --lambdaprime")
    lam = parse_cochar(args.lam, spec.r)
    lam2 = parse_cochar(args.lam2, spec.r)
    mu = parse_cochar(args.mu, spec.r) if args.mu else (0,) * spec.r
    c, c2, f = ops.as_cell(spec, lam), ops.as_cell(spec, lam2), ops.as_flat(spec, mu)
    if not (arrangement_of(spec).cell_leq_flat(c, f) and arrangement_of(spec).cell_leq_flat(c2, f)):
        raise UsageError("invalid triple: both cells must lie below the flat of --mu")
    wc = stabilizer_of_cell_span(spec, c)
    if args.poly is not None:
        inputs = [_poly(spec, args.poly)]
    elif args.generic:
        inputs = [ops.generic_polynomial(spec, wc, args.degree or 4)]
    else:
        rng = random.Random(args.seed)
        inputs = [ops.random_invariant(spec, wc, args.degree or 3, rng) for _ in range(args.random)]
    rep = VerifyReport(spec.name)
    lines = [f"C={c.label()}  C'={c2.label()}  F=span{arrangement_of(spec).generic_point(f)}"]
    for x in inputs:
        lhs = ops.mackey_lhs(spec, c, c2, f, x)
        terms = ops.mackey_terms(spec, c, c2, f, x)
        rhs = ops.mackey_rhs(spec, c, c2, f, x)
        ok = lhs.value == rhs.value
        rep.record("mackey", ok, lambda: dict(f=str(x), lhs=str(lhs), rhs=str(rhs)))
        if not args.generic or args.verbose:
            lines.append(f"f   = {x}")
        lines.append(f"lhs = {lhs}")
        if args.verbose:
            for t in terms:
                lines.append(f"  term w={[list(r) for r in t.rep.matrix]}: {t.value}")
        lines.append(f"rhs = {rhs}")
        lines.append("PASS" if ok else "FAIL")
    lines.append(rep.body())
    _emit(args, "\n".join(lines), json.loads(rep.to_json()))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(args):
    spec = _load(args)
    rep = run_verify(spec, args.trials, args.degree, args.seed)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.to_text())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_plot(args):
    from .plot import write_svg
    spec = _load(args)
    if spec.r != 2:
        raise UsageError(f"plot needs rank_t = 2, this spec has rank {spec.r}")
    write_svg(spec, args.out)
    arr = arrangement_of(spec)
    print(f"wrote {args.out}: {len(arr.normals)} lines, {len(arr.cells())} labelled cells")
    return EXIT_OK


def cmd_wheel(args):
    from .wheel import WheelShapeError, wheel_predicate
    spec = _load(args)
    p = _poly(spec, args.poly)
    try:
        res = wheel_predicate(spec, p, include_cartan=not args.no_cartan)
    except WheelShapeError as e:
        raise UsageError(str(e)) from None
    lines = [f"subspaces checked: {len(res.checked)} ({res.root_count} root, {res.cartan_count} cartan)"]
    for s in res.failing:
        lines.append(f"  fails on {s.describe(spec.r)}")
    lines.append("PASS" if res.passed else "FAIL")
    payload = {"passed": res.passed, "root_subspaces": res.root_count,
               "cartan_subspaces": res.cartan_count,
               "failing": [s.describe(spec.r) for s in res.failing]}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if res.passed else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="coxmackey", description="Coxeter complexes, shuffle "
                                "induction/restriction and exact Mackey-formula checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def spec_arg(sp):
        sp.add_argument("spec", help=f"JSON spec file or built-in name ({', '.join(BUILTIN)})")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("info", help="ranks, |W|, cell and flat counts")
    spec_arg(sp)
    sp.add_argument("--list", action="store_true", help="also list every cell and flat")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("query", help="kernel, euler, induct, restrict, braid, tits or degree")
    spec_arg(sp)
    sp.add_argument("what", choices=["kernel", "euler", "induct", "restrict", "braid", "tits", "degree"])
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--mu", help="generic cocharacter of the flat (default: origin)")
    sp.add_argument("--lambdaprime", dest="lam2")
    sp.add_argument("--poly")
    sp.add_argument("--part", choices=["V", "g"], default="V")
    sp.set_defaults(func=cmd_query)

    sp = sub.add_parser("mackey", help="check the Mackey formula on one triple")
    spec_arg(sp)
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--lambdaprime", dest="lam2")
    sp.add_argument("--mu")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--poly")
    g.add_argument("--random", type=int, default=1, metavar="N")
    g.add_argument("--generic", action="store_true", help="symbolic-coefficient f")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-v", "--verbose", action="store_true", help="print every double-coset term")
    sp.set_defaults(func=cmd_mackey)

    sp = sub.add_parser("verify", help="batch-check every property on every instance")
    spec_arg(sp)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--degree", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("plot", help="SVG of a rank-2 arrangement")
    spec_arg(sp)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_plot)

    sp = sub.add_parser("wheel", help="wheel-relation test of a polynomial")
    spec_arg(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--no-cartan", action="store_true",
                    help="only use subspaces attached to nonzero roots")
    sp.set_defaults(func=cmd_wheel)
    return p


def main(argv=None):
    argv = _fix_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ops.InvarianceError as e:
        print(f"counterexample: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
