"""Command line front end.

Commands: weight, perm, char, verify, tables.  All numeric output is exact
(p/q); exit code 0 on success, 1 on verification failure, 2 on usage or
parse errors.
"""

import argparse
import os
import sys
from fractions import Fraction

from .exactalg import format_poly, format_rat
from .io import load_input, ParseError
from .superalgebras import parse_algebra_spec, AlgebraError
from .diagrams import DiagramError
from . import tensorweights as tw
from . import permweights as pw
from . import characters as ch
from . import generators as gen
from .suites import SUITES, run_suite

Rat = Fraction


def _parse_tuv(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("need t,u,v")
    return tuple(Rat(p) for p in parts)


def cmd_weight(args):
    K = load_input(args.file)
    L = parse_algebra_spec(args.algebra)
    if args.tuv:
        K = gen.specialize_sum(K, _parse_tuv(args.tuv))
    res = tw.weight(K, L)
    if isinstance(res, dict):
        if not res:
            print("0")
            return 0
        for k in sorted(res):
            print("%s : %s" % (" ".join("e%d" % i for i in k), format_rat(res[k])))
        return 0
    print(format_rat(res))
    return 0


def cmd_perm(args):
    K = load_input(args.file)
    if args.family == "gl":
        P = pw.phi_gl(K)
    elif args.family == "osp":
        P = pw.phi_osp(K)
    else:
        raise ValueError("family must be gl or osp")
    text = P.format()
    print(text if text else "0")
    return 0


def cmd_char(args):
    K = load_input(args.file)
    fam = args.family
    if fam in ("sl", "osp"):
        poly = pw.char_from_perm(K, fam)
        print(format_poly(poly))
    elif fam == "d21":
        poly = tw.interpolate_char(K, [Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)][
            :max(2, args.degree // 2 + 2)])
        print(format_poly(poly))
    elif fam == "sl2":
        from .superalgebras import build_algebra
        print(format_rat(tw.char_value(K, build_algebra("sl2"))))
    else:
        raise ValueError("unknown family %r" % fam)
    return 0


def cmd_verify(args):
    failures = run_suite(args.suite)
    return 1 if failures else 0


def cmd_tables(args):
    os.makedirs(args.out, exist_ok=True)
    rows = ["degree\tfamily\tparameter\tvalue"]
    from .diagrams import insert_lambda
    t = gen.generator("t")
    elements = {1: t}
    cur = t
    for n in range(2, args.max_degree + 1):
        cur = insert_lambda(t, cur, 0)
        elements[n] = cur
    from .superalgebras import build_algebra
    for n, u in sorted(elements.items()):
        chi_sl = pw.char_from_perm(u, "sl")
        chi_osp = pw.char_from_perm(u, "osp")
        rows.append("%d\tsl\tdelta,beta\t%s" % (n, format_poly(chi_sl)))
        rows.append("%d\tosp\tdelta,alpha\t%s" % (n, format_poly(chi_osp)))
        rows.append("%d\tsl2\tt=2\t%s" % (
            n, format_rat(tw.char_value(u, build_algebra("sl2")))))
    path = os.path.join(args.out, "characters.tsv")
    with open(path, "w") as fh:
        fh.write("\n".join(rows) + "\n")
    print("wrote %s" % path)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="jdcalc",
                                 description="exact trivalent-diagram calculus")
    sub = ap.add_subparsers(dest="command", required=True)

    w = sub.add_parser("weight", help="tensor weight of a diagram file")
    w.add_argument("--algebra", required=True,
                   help="algebra spec, e.g. gl:3, gl:2|1, so:4, sl2, d21:3/2")
    w.add_argument("--tuv", help="specialize S coefficients at t,u,v")
    w.add_argument("file")
    w.set_defaults(fn=cmd_weight)

    p = sub.add_parser("perm", help="permutation-model image of a diagram file")
    p.add_argument("--family", required=True, choices=["gl", "osp"])
    p.add_argument("file")
    p.set_defaults(fn=cmd_perm)

    c = sub.add_parser("char", help="family character of a 3-legged element")
    c.add_argument("--family", required=True, choices=["sl", "osp", "d21", "sl2"])
    c.add_argument("--degree", type=int, default=1)
    c.add_argument("file")
    c.set_defaults(fn=cmd_char)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES))
    v.set_defaults(fn=cmd_verify)

    t = sub.add_parser("tables", help="emit character tables as TSV")
    t.add_argument("--max-degree", type=int, default=3)
    t.add_argument("--out", required=True)
    t.set_defaults(fn=cmd_tables)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, DiagramError, AlgebraError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
