import random
from fractions import Fraction as F

import pytest

from jdcalc.characters import (family_polynomials, admissible_triple,
                               tuv_from_triple, family_vanishes, mring_reduce,
                               mring_basis, f_apply, f_morphism,
                               f_kernel_report, psi_characters_codim,
                               psi_determinant, psi_determinant_closed_form,
                               hilbert_quotient_dims, hilbert_series_coeffs,
                               IdealSpan, cartesian_square_check,
                               exceptional_pair_quotient_dims, glue_character,
                               GlueInconsistency, genfun_rhs_components,
                               ALPHA_EXCEPTIONAL, MRING, S)
from jdcalc.exactalg import RINGS, format_poly


def test_admissible_triples():
    triple, tuv = admissible_triple("sl", (3,))
    assert triple == (F(2), F(-2), F(3)) and tuv == (F(3), F(2), F(-6))
    triple, tuv = admissible_triple("d21", (F(-2),))
    assert tuv == (F(0), F(3, 2), F(-1))
    # d21 with (a,b,c) = (1,-2,1) scaled by 2 is the osp(4|2) point
    assert tuv_from_triple(2, -4, 2) == (F(0), F(6), F(-8))
    _, tuv = admissible_triple("sl2", (5, 7))
    assert family_vanishes("sl2", tuv)


def test_family_vanishing_sampled():
    rng = random.Random(2)
    for _ in range(20):
        d = F(rng.randrange(2, 30))
        assert family_vanishes("sl", tuv_from_triple(2, -2, d))
        assert family_vanishes("osp", tuv_from_triple(4, -2, d - 4))
        assert family_vanishes("d21", tuv_from_triple(1, d, -1 - d))
        t0 = F(rng.randrange(1, 9))
        al = F(rng.randrange(-5, 6))
        assert family_vanishes("ex", tuv_from_triple(2 * t0 / 3, al, t0 / 3 - al))


def test_exceptional_constants():
    assert ALPHA_EXCEPTIONAL == [F(7, 72), F(-4, 81), F(-22, 225), F(-7, 81),
                                 F(-5, 72)]
    polys = family_polynomials()
    assert polys["Q_ex"].homogeneous_degree() == 10


def test_mring_reduction():
    a, b, d = MRING.var("a"), MRING.var("b"), MRING.var("d")
    assert mring_reduce(a * b) == a ** 3
    assert mring_reduce(b * b) == b * b
    assert mring_reduce(d * a * b * b) == d * (a ** 5)
    # basis has no mixed a b monomials
    for e in mring_basis(6):
        assert not (e[1] >= 1 and e[2] >= 1)


def test_mring_hilbert_series():
    # (1 - t^3)/((1-t)^2 (1-t^2))
    coeffs = hilbert_series_coeffs([(0, F(1)), (3, F(-1))],
                                   [(1, F(-1)), (1, F(-1)), (2, F(-1))], 9)
    for n in range(10):
        assert len(mring_basis(n)) == int(coeffs[n])


def test_f_images():
    f = f_morphism()
    assert format_poly(f(S.var("t"))) == "1 * d + -2 * a"
    polys = family_polynomials()
    assert f_apply(polys["P_sl"] * polys["P_osp"]).is_zero()
    assert not f_apply(polys["P_sl"]).is_zero()


def test_f_kernel_matches_ideal():
    rep = f_kernel_report(10)
    assert all(r["match"] for r in rep)
    assert [r["dim_ker"] for r in rep] == [0] * 9 + [1, 1]


def test_codimension_three():
    rep = psi_characters_codim(8)
    assert all(r["match"] for r in rep)
    assert [r["codim_kernels"] for r in rep] == [0, 1, 2, 2, 3, 3, 3, 3, 3]


def test_determinant_values():
    assert psi_determinant(3) == 0
    assert psi_determinant(4) == -138240
    assert psi_determinant(4) == psi_determinant_closed_form(4)
    for n in range(4, 11):
        assert psi_determinant(n) == psi_determinant_closed_form(n) != 0


def test_hilbert_quotient():
    polys = family_polynomials()
    dims = hilbert_quotient_dims(polys["P_sl"] * polys["P_osp"], 10)
    coeffs = hilbert_series_coeffs([(0, F(1)), (9, F(-1))],
                                   [(1, F(-1)), (2, F(-1)), (3, F(-1))], 10)
    assert dims == [int(c) for c in coeffs]


def test_square_trivial_pair():
    polys = family_polynomials()
    p = polys["P_sl"]
    ok, _ = cartesian_square_check(IdealSpan([p]), IdealSpan([p]),
                                   IdealSpan([p]), 8)
    assert ok


def test_square_fails_on_wrong_claim():
    polys = family_polynomials()
    t = S.var("t")
    ok, bad = cartesian_square_check(IdealSpan([t]),
                                     IdealSpan([polys["P_sl"]]),
                                     IdealSpan([t]), 6)
    assert not ok


def test_exceptional_quotient_is_dual_numbers():
    dims = exceptional_pair_quotient_dims(0, 1, 6)
    assert dims == [1, 1, 0, 0, 0, 0, 0]


def test_glue_trivial_and_fault():
    ringb = RINGS["Q[d,b]"]
    ringa = RINGS["Q[d,a]"]
    rings23 = RINGS["Q[s2,s3]"]
    values = {"sl": ringb.one(), "osp": ringa.one(), "d21": rings23.one(),
              "sl2": F(1)}
    out = glue_character(values, 0)
    assert out == S.one()
    bad = dict(values)
    bad["sl"] = ringb.one().scale(F(2))
    with pytest.raises(GlueInconsistency) as err:
        glue_character(bad, 0)
    assert err.value.family == "sl"


def test_sl3_point_shared_with_f4():
    from jdcalc.characters import SHARED_CHARACTER_POINTS
    point = SHARED_CHARACTER_POINTS[("sl3", "f(4)")]
    assert point == (F(3), F(2), F(-6))
    assert family_vanishes("sl", point)
    polys = family_polynomials()
    t, u, v = point
    assert polys["P_ex"].evaluate({"t": t, "u": u, "v": v}) != 0


def test_genfun_components():
    comps = genfun_rhs_components(4)
    t, u, v = S.var("t"), S.var("u"), S.var("v")
    assert comps[0].is_zero()
    assert comps[1] == t.scale(2)
    assert comps[2] == t ** 2
    assert comps[3] == t ** 3 + (t * u).scale(3) - v.scale(3)
    assert comps[4] == t ** 4 + ((t ** 2) * u).scale(4) - (t * v).scale(4)
