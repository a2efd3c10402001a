"""Named verification suites.

Each check is a callable returning (ok, detail); suites are fixed lists of
checks so the command line and the acceptance tests share one manifest.
Randomized checks use fixed seeds, making every run byte-identical.
"""

from fractions import Fraction
import random
import time

from .exactalg import RINGS, format_poly
from .diagrams import (random_diagram, relation_sum, DiagramError,
                       JacobiDiagram, insert_lambda, compose, tripod_diagram)
from . import permweights as pw
from . import tensorweights as tw
from . import characters as ch
from . import generators as gen
from .superalgebras import build_algebra

Rat = Fraction
QD = RINGS["Q[D]"]


def _sample_diagram(rng, max_legs, max_vertices, min_vertices=1):
    while True:
        legs = rng.randrange(0, max_legs + 1)
        verts = rng.randrange(min_vertices, max_vertices + 1)
        if (legs + 3 * verts) % 2 == 0 and legs + verts >= 2:
            try:
                return random_diagram(rng, legs, verts)
            except DiagramError:
                continue


def _basis_inputs(rng, L, n):
    return [{rng.randrange(L.dim): Rat(1)} for _ in range(n)]


# -- sigma6 -----------------------------------------------------------------------

def check_sigma6_dimension():
    t0 = time.time()
    basis, kern = pw.sigma6_invariant_subspace()
    spent = time.time() - t0
    if len(kern) != 4:
        return False, "dimension %d != 4" % len(kern)
    ys = pw.y_basis()
    index = {s: i for i, s in enumerate(basis)}
    rows = []
    for y in ys:
        row = [Rat(0)] * len(basis)
        for s, p in y.terms.items():
            row[index[s]] = p.constant()
        rows.append(row)
    from .linalg import rank
    if rank(rows) != 4 or rank(rows + kern) != 4:
        return False, "y1..y4 do not span the subspace"
    return spent < 10.0, "dimension 4, basis y1..y4, %.1fs" % spent


def check_f6_values():
    ys = pw.y_basis()
    f6 = [pw.f6_map(y) for y in ys]
    if not f6[0].is_zero():
        return False, "f6(y1) != 0"
    if not f6[3].is_zero():
        return False, "f6(y4) != 0"
    if f6[1].is_zero() or f6[1] != f6[2]:
        return False, "f6(y2) = f6(y3) != 0 fails"
    return True, "f6(y1) = f6(y4) = 0, f6(y2) = f6(y3) != 0"


def check_d4_constants():
    ys = pw.y_basis()
    c123 = pw.cycles_to_perm(3, [(1, 2, 3)])
    c132 = pw.cycles_to_perm(3, [(1, 3, 2)])
    want = [{(2,): Rat(-24)},
            {(2,): Rat(16), (0,): Rat(-16)},
            {(2,): Rat(-8), (0,): Rat(-16)},
            {(0,): Rat(-48)}]
    for i, y in enumerate(ys):
        g = pw.glue_perm(y, "D4")
        pos = g.terms.get(c123, QD.zero())
        neg = g.terms.get(c132, QD.zero())
        extra = [s for s in g.terms if s not in (c123, c132)]
        if extra or not (pos + neg).is_zero():
            return False, "D4(y%d) is not on the tripod class" % (i + 1)
        if dict(pos.terms) != want[i]:
            return False, "D4(y%d) = %s" % (i + 1, format_poly(pos))
    return True, "D4 sends y to (-24D^2, 16D^2-16, -8D^2-16, -48) x class"


def check_d2_identities():
    snow = pw.snowflake_diagram()
    P2 = pw.phi_gl(snow)
    y1 = pw.y_basis()[0].scale(Rat(1, 6))
    if P2 != y1:
        return False, "Phi_gl(D2) != (1/6) y1"
    comp = compose(snow, 0, 6, pw.d1_diagram(), 3)
    Pc = pw.phi_gl(comp)
    c123 = pw.cycles_to_perm(3, [(1, 2, 3)])
    c132 = pw.cycles_to_perm(3, [(1, 3, 2)])
    expect = pw.PermPoly(3)
    expect.add(c123, QD.monomial((3,), Rat(8)))
    expect.add(c132, QD.monomial((3,), Rat(-8)))
    if Pc != expect:
        return False, "Phi_gl(D1 . D2) != 8 D^3 x class"
    gl3 = build_algebra("gl", 3, 0)
    w1 = tw.weight(comp, gl3)
    w0 = tw.weight(tripod_diagram(), gl3)
    ratio = None
    for k, v in w0.items():
        if v:
            ratio = w1.get(k, Rat(0)) / v
            break
    ok = ratio == 216 and \
        all(w1.get(k, Rat(0)) == ratio * v for k, v in w0.items()) and \
        all(k in w0 for k in w1)
    if not ok:
        return False, "gl(3) weight of D1 . D2 is %s x tripod, want 216" % ratio
    return True, "Phi_gl(D2) = (1/6) y1; D1 . D2 = 8 t^3 (factor 216 at gl(3))"


# -- oracle equivalence ---------------------------------------------------------------

def check_oracle_gl(n_diagrams=50, seed=20240):
    rng = random.Random(seed)
    algebras = [build_algebra("gl", 2, 0), build_algebra("gl", 3, 0)]
    for i in range(n_diagrams):
        d = _sample_diagram(rng, 6, 6)
        P = pw.phi_gl(d)
        for L in algebras:
            for _ in range(3):
                xs = _basis_inputs(rng, L, len(d.legs))
                lhs = pw.perm_apply(P, L, xs)
                rhs = tw.weight(d, L, inputs=xs)
                if lhs != rhs:
                    return False, "diagram %d under %s: %s != %s" % (
                        i, L.name, lhs, rhs)
    return True, "%d diagrams match gl(2) and gl(3)" % n_diagrams


def check_oracle_osp(n_diagrams=50, seed=20241):
    rng = random.Random(seed)
    algebras = [build_algebra("so", n) for n in (3, 4, 5)]
    for i in range(n_diagrams):
        d = _sample_diagram(rng, 6, 6)
        P = pw.phi_osp(d)
        for L in algebras:
            for _ in range(2):
                xs = _basis_inputs(rng, L, len(d.legs))
                lhs = pw.perm_apply(P, L, xs)
                rhs = tw.weight(d, L, inputs=xs)
                if lhs != rhs:
                    return False, "diagram %d under %s: %s != %s" % (
                        i, L.name, lhs, rhs)
    return True, "%d diagrams match so(3), so(4), so(5)" % n_diagrams


# -- relation vanishing -----------------------------------------------------------------

def _random_relation(rng):
    kind = rng.choice(["AS", "IHX", "STU"])
    if kind == "AS":
        d = _sample_diagram(rng, 4, 4)
        return kind, relation_sum(d, rng.randrange(len(d.vertices)), "AS")
    if kind == "IHX":
        for _ in range(200):
            d = _sample_diagram(rng, 4, 4, min_vertices=2)
            seats = d.seats()
            edges = [(h, p) for h, p in d.pairing.items()
                     if seats[h][0] == "vx" and seats[p][0] == "vx"
                     and seats[h][1] != seats[p][1]]
            if edges:
                return kind, relation_sum(d, rng.choice(edges), "IHX")
        raise DiagramError("no IHX site found")
    # STU: a vertex hanging on a circle with extra structure
    d = _random_skeleton_diagram(rng)
    return kind, relation_sum(d, 0, "STU")


def _random_skeleton_diagram(rng):
    # one circle with two attachments; the first feeds a vertex carrying two
    # legs, the second is a plain leg (enough variety for the relation test)
    n_extra = rng.choice([0, 1])
    if n_extra == 0:
        legs = [0, 1]
        vx = [(2, 3, 4)]
        circ = [(5,)]
        pairing = {2: 5, 5: 2, 3: 0, 0: 3, 4: 1, 1: 4}
        return JacobiDiagram(legs, vx, pairing, circ)
    legs = [0, 1]
    vx = [(3, 4, 5), (6, 7, 8)]
    circ = [(9, 10)]
    pairing = {3: 9, 9: 3, 4: 0, 0: 4, 5: 6, 6: 5, 7: 1, 1: 7, 8: 10, 10: 8}
    return JacobiDiagram(legs, vx, pairing, circ)


def check_relations(n_relations=100, seed=77):
    rng = random.Random(seed)
    algebras = [build_algebra("gl", 2, 0), build_algebra("gl", 2, 1),
                build_algebra("sl2"), build_algebra("d21", Rat(2))]
    counts = {"AS": 0, "IHX": 0, "STU": 0}
    for i in range(n_relations):
        kind, r = _random_relation(rng)
        counts[kind] += 1
        if kind != "STU":
            if not pw.phi_gl(r).is_zero():
                return False, "relation %d (%s) survives phi_gl" % (i, kind)
            if not pw.phi_osp(r).is_zero():
                return False, "relation %d (%s) survives phi_osp" % (i, kind)
        for L in algebras:
            n = None
            for key in r.terms:
                n = len(key.diagram.legs)
                break
            if n is None:
                continue
            for _ in range(2):
                xs = _basis_inputs(rng, L, n)
                val = tw.weight(r, L, inputs=xs)
                if val != 0:
                    return False, "relation %d (%s) weight %s under %s" % (
                        i, kind, val, L.name)
    return True, "%d relations annihilated (AS %d, IHX %d, STU %d)" % (
        n_relations, counts["AS"], counts["IHX"], counts["STU"])


# -- Eq. (1) spectra ------------------------------------------------------------------------

EQ1_ALGEBRAS = [("sl2", ()), ("sl3", ()), ("gl", (2, 1)), ("osp", (3, 2)),
                ("osp", (4, 2)), ("d21", (Rat(1),)), ("d21", (Rat(-2),)),
                ("d21", (Rat(-1, 2),)), ("d21", (Rat(2),))]


def check_eq1():
    details = []
    for spec, params in EQ1_ALGEBRAS:
        L = build_algebra(spec, *params)
        s = tw.psi_spectrum(L)
        if s.degenerate:
            if spec != "sl2":
                return False, "%s unexpectedly degenerate" % L.name
            if s.triple[0] != -s.t:
                return False, "sl2 eigenvalue is not -t"
            details.append("sl2: Psi = -t on simple E")
            continue
        if not tw.psi_cubic_holds(L, s):
            return False, "cubic identity fails for %s" % L.name
        if spec == "osp" and params == (4, 2):
            if s.tuv() != (Rat(0), Rat(6), Rat(-8)):
                return False, "osp(4|2) point %s != (0,6,-8)" % (s.tuv(),)
        fam = {"sl2": "sl2", "sl3": "sl", "gl": "sl", "osp": "osp",
               "d21": "d21"}[spec]
        if not ch.family_vanishes(fam, s.tuv()):
            return False, "family polynomial nonzero at %s" % L.name
        details.append("%s: (t,u,v) = (%s,%s,%s)" % ((L.name,) + s.tuv()))
    return True, "; ".join(details)


# -- Hilbert data ----------------------------------------------------------------------------

def check_hilbert():
    polys = ch.family_polynomials()
    dims = ch.hilbert_quotient_dims(polys["P_sl"] * polys["P_osp"], 12)
    coeffs = ch.hilbert_series_coeffs([(0, Rat(1)), (9, Rat(-1))],
                                      [(1, Rat(-1)), (2, Rat(-1)), (3, Rat(-1))], 12)
    if dims != [int(c) for c in coeffs]:
        return False, "quotient dims %s != series %s" % (dims, coeffs)
    rep = ch.psi_characters_codim(12)
    for r in rep:
        if not r["match"]:
            return False, "codim mismatch in degree %d" % r["degree"]
        if r["degree"] >= 4 and r["codim_kernels"] != 3:
            return False, "codim != 3 in degree %d" % r["degree"]
    if ch.psi_determinant(3) != 0:
        return False, "determinant does not vanish at n = 3"
    for n in range(3, 13):
        if ch.psi_determinant(n) != ch.psi_determinant_closed_form(n):
            return False, "determinant closed form fails at n = %d" % n
    krep = ch.f_kernel_report(12)
    if not all(r["match"] for r in krep):
        return False, "ker f != (P_sl P_osp) in some degree"
    return True, "series, codimensions, determinant and ker f agree through degree 12"


# -- Cartesian squares ------------------------------------------------------------------------

def check_squares(probe=12):
    polys = ch.family_polynomials()
    S = RINGS["S"]
    t, u = S.var("t"), S.var("u")
    pairs = [
        ("(t),(PslPosp)", [polys["P_d21"]], [polys["P_sl"] * polys["P_osp"]],
         [polys["P_d21"] * polys["P_sl"] * polys["P_osp"]]),
        ("(Psl2),(tPslPosp)", [polys["P_sl2"]],
         [polys["P_d21"] * polys["P_sl"] * polys["P_osp"]],
         [polys["P_d21"] * polys["P_sl"] * polys["P_osp"] * polys["P_sl2"]]),
    ]
    # exceptional pairs: consecutive gluing of the five lines
    prods = [u - (t ** 2).scale(a) for a in ch.ALPHA_EXCEPTIONAL]
    left = prods[0]
    for i in range(1, 5):
        pairs.append(("exceptional step %d" % i,
                      [polys["P_ex"], left],
                      [polys["P_ex"], prods[i]],
                      [polys["P_ex"], left * prods[i]]))
        left = left * prods[i]
    for name, gi, gj, gc in pairs:
        ok, bad = ch.cartesian_square_check(ch.IdealSpan(gi), ch.IdealSpan(gj),
                                            ch.IdealSpan(gc), probe)
        if not ok:
            return False, "%s fails in degree %d" % (name, bad)
    dims = ch.exceptional_pair_quotient_dims(0, 1, probe)
    if dims != [1, 1] + [0] * (probe - 1):
        return False, "S/(I_g2 + I_f4) dims %s" % dims
    return True, "%d squares verified through degree %d" % (len(pairs), probe)


# -- gluing and the generating function ----------------------------------------------------------

def check_glue():
    t = gen.generator("t")
    unit = gen.generator("tripod_unit")
    t2 = insert_lambda(t, t, 0)
    t3 = insert_lambda(t, t2, 0)
    S = RINGS["S"]
    expect = {
        "1": (unit, S.one()),
        "t": (t, S.var("t")),
        "t^2": (t2, S.var("t") ** 2),
        "t^3": (t3, S.var("t") ** 3),
        "x3": (gen.generator("x_n", 3),
               S.var("t") ** 3 + (S.var("t") * S.var("u")).scale(3)
               - S.var("v").scale(3)),
    }
    for name, (u_sum, target) in expect.items():
        got = ch.glue_from_element(u_sum)
        if got != target:
            return False, "glue(%s) = %s, want %s" % (
                name, format_poly(got), format_poly(target))
    # the injected-fault certificate: perturb the sl value of t^2
    data = ch.family_character_data(t2)
    bad = dict(data)
    ringb = RINGS["Q[d,b]"]
    bad["sl"] = data["sl"] + ringb.monomial((0, 1), Rat(1))
    try:
        ch.glue_character(bad, 2)
        return False, "perturbed sl data glued without a certificate"
    except ch.GlueInconsistency as exc:
        if exc.family != "sl":
            return False, "certificate names %s, not sl" % exc.family
    return True, "1, t, t^2, t^3, x3 glue uniquely; fault certificate names sl"


def check_genfun():
    xs = {n: gen.generator("x_n", n) for n in (1, 2, 3)}
    for spec in (("sl2", ()), ("gl", (3, 0))):
        L = build_algebra(spec[0], *spec[1])
        rep = ch.genfun_check(L, 3, xs)
        for row in rep[1:]:
            if not row["match"]:
                return False, "%s degree %d: series %s vs char %s" % (
                    L.name, row["degree"], row["series"], row["char"])
    return True, "components 1..3 match for sl2 and gl(3); degree 0 empty"


# -- annihilators -----------------------------------------------------------------------------------

ANNIHILATOR_ALGEBRAS = [("sl2", ()), ("sl3", ()), ("gl", (2, 1)),
                        ("osp", (3, 2)), ("osp", (4, 2))]


def check_annihilators():
    # cross-check of the two evaluation paths on sl2 (one u sample): the
    # diagram weight and the operator chain must both vanish
    sl2 = build_algebra("sl2")
    tuv = (Rat(2), Rat(1), Rat(-6))
    K2 = gen.specialize_sum(gen.k2_element(), tuv)
    wd = tw.weight(K2, sl2)
    if any(v for v in wd.values()):
        return False, "K2 diagram weight nonzero on sl2"
    if ch.psi_chain_operator_columns(sl2, ch.k2_coefficients(tuv)):
        return False, "K2 operator columns nonzero on sl2"
    report = ch.divisibility_probes()
    for row in report:
        if not row["ok"]:
            return False, "%s fails (%s)" % (row["check"], row.get("residue", ""))
    return True, "K0, K1, K2 annihilated; K3 divisible by (9u - 5t^2) on the sl2 line"


SUITES = {
    "relations": [("relations", check_relations)],
    "oracle-gl": [("oracle-gl", check_oracle_gl)],
    "oracle-osp": [("oracle-osp", check_oracle_osp)],
    "maple-sigma6": [("sigma6-dimension", check_sigma6_dimension),
                     ("f6-values", check_f6_values),
                     ("d4-constants", check_d4_constants),
                     ("d2-identities", check_d2_identities)],
    "hilbert": [("hilbert", check_hilbert)],
    "squares": [("squares", check_squares)],
    "eq1": [("eq1", check_eq1)],
    "genfun": [("glue", check_glue), ("genfun", check_genfun)],
    "annihilators": [("annihilators", check_annihilators)],
}
SUITES["all"] = [item for name in ["relations", "oracle-gl", "oracle-osp",
                                   "maple-sigma6", "hilbert", "squares", "eq1",
                                   "genfun", "annihilators"]
                 for item in SUITES[name]]


def run_suite(name, out=print):
    if name not in SUITES:
        raise KeyError("unknown suite %r" % name)
    failures = 0
    for check_name, fn in SUITES[name]:
        t0 = time.time()
        ok, detail = fn()
        status = "PASS" if ok else "FAIL"
        out("%s %-18s %6.1fs  %s" % (status, check_name, time.time() - t0, detail))
        if not ok:
            failures += 1
    return failures
