import itertools
import random
from fractions import Fraction as F

import pytest

from jdcalc.diagrams import (DiagramSum, tripod_diagram, triangle_diagram,
                             theta_diagram, circle_diagram, cup_diagram,
                             wheel_diagram, random_diagram, compose,
                             insert_lambda)
from jdcalc.superalgebras import build_algebra, AlgebraError
from jdcalc.tensorweights import (weight, evaluate_diagram, psi_operator,
                                  psi_spectrum, psi_cubic_holds, char_value,
                                  interpolate_char, extract_t, casimir_vector,
                                  Operator2, tau_operator, psi_diagram,
                                  minimal_polynomial, rational_roots,
                                  ContractionError)
from jdcalc.exactalg import RINGS, format_poly


def naive_theta(L):
    """Independent full-basis contraction of the theta diagram.

    Valid for purely even algebras where no Koszul signs arise: color the
    three edges, take C at both vertices with raised indices via omega.
    """
    n = L.dim

    def C(a, b, c):
        return sum(w * L.form[k][c] for k, w in L.brk(a, b).items())

    total = F(0)
    for a in range(n):
        for ap in range(n):
            wa = L.omega[a][ap]
            if not wa:
                continue
            for b in range(n):
                for bp in range(n):
                    wb = L.omega[b][bp]
                    if not wb:
                        continue
                    for c in range(n):
                        x = C(a, b, c)
                        if not x:
                            continue
                        for cp in range(n):
                            wc = L.omega[c][cp]
                            if not wc:
                                continue
                            total += wa * wb * wc * x * C(cp, bp, ap)
    return total


def test_theta_against_naive_gl2():
    gl2 = build_algebra("gl", 2, 0)
    assert weight(theta_diagram(), gl2) == naive_theta(gl2) == 12


def test_theta_so_values():
    for n, val in ((3, 6), (4, 24), (5, 60)):
        L = build_algebra("so", n)
        assert weight(theta_diagram(), L) == val


def test_circle_is_superdimension_of_the_algebra():
    gl21 = build_algebra("gl", 2, 1)
    assert weight(circle_diagram(), gl21) == gl21.sdim()
    gl2 = build_algebra("gl", 2, 0)
    assert weight(circle_diagram(), gl2) == 4


def test_adjoint_casimir_eigenvalue():
    # the two-legged Casimir action diagram acts by 2t
    from jdcalc.diagrams import bubble_on_strand
    sl2 = build_algebra("sl2")
    t = extract_t(sl2)
    assert t == 2
    cols = {}
    for a in range(sl2.dim):
        res = evaluate_diagram(bubble_on_strand(), sl2,
                               [("in", {a: F(1)}), "out"])
        for (b,), c in res.items():
            cols[(a, b)] = c
    for a in range(sl2.dim):
        for b in range(sl2.dim):
            assert cols.get((a, b), F(0)) == (2 * t if a == b else 0)


def test_functoriality_on_random_pairs():
    # weight(compose(A, B)) equals the omega-contraction of the two weights;
    # gl(2) is even, so the middle contraction needs no sign bookkeeping
    rng = random.Random(15)
    gl2 = build_algebra("gl", 2, 0)
    n = gl2.dim
    for _ in range(30):
        a = random_diagram(rng, 4, 2)
        b = random_diagram(rng, 4, 2)
        comp = compose(a, 2, 2, b, 2)
        xs = [{rng.randrange(n): F(1)} for _ in range(2)]
        ys = [{rng.randrange(n): F(1)} for _ in range(2)]
        lhs = weight(comp, gl2, inputs=xs + ys)
        rhs = F(0)
        for m1, k1 in itertools.product(range(n), repeat=2):
            w1 = gl2.omega[m1][k1]
            if not w1:
                continue
            for m2, k2 in itertools.product(range(n), repeat=2):
                w2 = gl2.omega[m2][k2]
                if not w2:
                    continue
                va = weight(a, gl2, inputs=xs + [{m1: F(1)}, {m2: F(1)}])
                if not va:
                    continue
                vb = weight(b, gl2, inputs=[{k1: F(1)}, {k2: F(1)}] + ys)
                rhs += w1 * w2 * va * vb
        assert lhs == rhs


def test_psi_spectra_golden():
    sl3 = build_algebra("sl3")
    s = psi_spectrum(sl3)
    assert s.tuv() == (F(3), F(2), F(-6))
    assert sorted(s.triple) == [F(-2), F(2), F(3)]
    assert psi_cubic_holds(sl3, s)
    sl2 = build_algebra("sl2")
    s2 = psi_spectrum(sl2)
    assert s2.degenerate and s2.triple[0] == -s2.t == -2
    gl21 = build_algebra("gl", 2, 1)
    s3 = psi_spectrum(gl21)
    assert s3.tuv() == (F(1), F(2), F(-2))
    assert psi_cubic_holds(gl21, s3)


def test_psi_acts_by_2t_on_casimir():
    sl3 = build_algebra("sl3")
    psi = psi_operator(sl3)
    om = casimir_vector(sl3)
    out = psi.apply(om)
    assert out == {k: 2 * F(3) * c for k, c in om.items()}


def test_char_values():
    sl2 = build_algebra("sl2")
    unit = DiagramSum.single(tripod_diagram())
    t = DiagramSum.single(triangle_diagram())
    assert char_value(unit, sl2) == 1
    assert char_value(t, sl2) == 2
    d21 = build_algebra("d21", F(1))
    assert char_value(t, d21, check_second=False) == 0


def test_interpolate_char_degree1_is_zero():
    t = DiagramSum.single(triangle_diagram())
    poly = interpolate_char(t, [F(2), F(3)])
    assert poly.is_zero()


def test_interpolate_char_held_out_guard():
    from jdcalc.generators import generator
    with pytest.raises(AlgebraError):
        interpolate_char(generator("x_n", 3), [F(2)])


def test_minimal_polynomial_helpers():
    m = [[F(2), F(1)], [F(0), F(2)]]
    mp = minimal_polynomial(m)
    assert mp == [F(4), F(-4), F(1)]  # (X-2)^2
    assert rational_roots(mp) == [F(2), F(2)]


def test_resource_guard(monkeypatch):
    monkeypatch.setenv("JD_MAX_TENSOR", "10")
    gl3 = build_algebra("gl", 3, 0)
    with pytest.raises(ContractionError):
        evaluate_diagram(theta_diagram(), gl3, [])
    monkeypatch.delenv("JD_MAX_TENSOR")
