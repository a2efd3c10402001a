import random
from fractions import Fraction as F

import pytest

from jdcalc.permweights import (phi_gl, phi_osp, perm_apply, PermPoly,
                                cycles_to_perm, perm_inv, char_from_perm,
                                project_delta0_and_sigma_prime,
                                inversion_symmetrize, sigma_compose,
                                group_G6, epsilon_G6, y_basis, f6_map,
                                glue_perm, delete_leg, snowflake_diagram,
                                d1_diagram, d4_diagram, perm_mul)
from jdcalc.diagrams import (DiagramSum, tripod_diagram, triangle_diagram,
                             theta_diagram, cup_diagram, circle_diagram,
                             wheel_diagram, random_diagram, compose,
                             insert_lambda, DiagramError)
from jdcalc.superalgebras import build_algebra
from jdcalc.tensorweights import weight
from jdcalc.exactalg import RINGS, format_poly

QD = RINGS["Q[D]"]
C123 = cycles_to_perm(3, [(1, 2, 3)])
C132 = cycles_to_perm(3, [(1, 3, 2)])


def test_phi_gl_basics():
    P = phi_gl(tripod_diagram())
    assert P.terms[C123].constant() == 1
    assert P.terms[C132].constant() == -1
    Pc = phi_gl(cup_diagram())
    assert list(Pc.terms) == [cycles_to_perm(2, [(1, 2)])]
    Pt = phi_gl(triangle_diagram())
    assert Pt.terms[C123] == QD.monomial((1,), F(1))
    d = phi_gl(circle_diagram())
    assert d.terms[()] == QD.monomial((2,), F(1))


def test_phi_osp_basics():
    Pc = phi_osp(cup_diagram())
    assert Pc.terms[cycles_to_perm(2, [(1, 2)])].constant() == F(1, 2)
    Pth = phi_osp(theta_diagram())
    # D(D-1)(D-2)
    val = Pth.terms[()]
    assert val.evaluate({"D": F(3)}) == 6
    assert val.evaluate({"D": F(5)}) == 60


def test_phi_gl_rejects_skeleton():
    from jdcalc.diagrams import JacobiDiagram
    d = JacobiDiagram([0, 1], [(2, 3, 4)], {2: 5, 5: 2, 3: 0, 0: 3, 4: 1, 1: 4},
                      [(5,)])
    with pytest.raises(DiagramError):
        phi_gl(d)
    with pytest.raises(DiagramError):
        phi_osp(d)


def _rand(rng, max_legs=4, max_v=4):
    while True:
        legs = rng.randrange(0, max_legs + 1)
        verts = rng.randrange(1, max_v + 1)
        if (legs + 3 * verts) % 2 == 0:
            try:
                return random_diagram(rng, legs, verts)
            except DiagramError:
                continue


def test_oracle_spot_checks():
    rng = random.Random(42)
    gl2 = build_algebra("gl", 2, 0)
    so4 = build_algebra("so", 4)
    for _ in range(6):
        d = _rand(rng)
        P, Q = phi_gl(d), phi_osp(d)
        for _ in range(2):
            xs = [{rng.randrange(gl2.dim): F(1)} for _ in range(len(d.legs))]
            assert perm_apply(P, gl2, xs) == weight(d, gl2, inputs=xs)
            ys = [{rng.randrange(so4.dim): F(1)} for _ in range(len(d.legs))]
            assert perm_apply(Q, so4, ys) == weight(d, so4, inputs=ys)


def test_inversion_symmetry_of_gl_image():
    # Phi_gl(F_n) is fixed by sigma -> (sigma + (-1)^n sigma^{-1})/2
    rng = random.Random(9)
    for _ in range(12):
        d = _rand(rng)
        P = phi_gl(d)
        assert inversion_symmetrize(P) == P


def test_delta0_image_has_odd_cycle_count():
    # odd-degree six-legged diagrams project into odd-cycle permutations
    rng = random.Random(31)
    found = 0
    while found < 6:
        d = _rand(rng, max_legs=6, max_v=6)
        if len(d.legs) != 6 or d.degree() % 2 == 0:
            continue
        found += 1
        P = project_delta0_and_sigma_prime(phi_gl(d), mode="delta=0")
        from jdcalc.permweights import perm_cycles
        for s in P.terms:
            assert len(perm_cycles(s)) % 2 == 1


def test_projections():
    P = PermPoly(2)
    P.add((0, 1), QD.monomial((1,), F(1)))   # D <id>, has fixed points
    P.add((1, 0), QD.one())
    out = project_delta0_and_sigma_prime(P, mode="both")
    assert list(out.terms) == [(1, 0)]


def test_sigma_compose_functorial():
    rng = random.Random(4)
    for _ in range(10):
        a = random_diagram(rng, 5, 3)
        b = random_diagram(rng, 5, 3)
        lhs = phi_gl(compose(a, 2, 3, b, 2))
        rhs = sigma_compose(phi_gl(a), 2, 3, phi_gl(b), 2)
        assert lhs == rhs


def test_group_and_epsilon():
    G = group_G6()
    assert len(G) == 48
    eps = epsilon_G6()
    assert eps[cycles_to_perm(6, [(1, 4, 2, 3)])] == 1
    rng = random.Random(1)
    for _ in range(40):
        g1, g2 = rng.choice(G), rng.choice(G)
        assert eps[perm_mul(g1, g2)] == eps[g1] * eps[g2]


def test_antisymmetrized_projection_kills_odd_part():
    # an eps-odd element projects to zero under the (G, eps) average
    eps = epsilon_G6()
    from jdcalc.permweights import conj_action
    c = cycles_to_perm(6, [(1, 2, 3, 4, 5, 6)])
    P = PermPoly(6)
    g0 = cycles_to_perm(6, [(1, 2)])
    # v - eps(g0) g0 v g0^-1 is odd for the projector built on g0
    P.add(c, QD.one())
    P.add(conj_action(g0, c), QD.one().scale(-eps[g0]))
    avg = PermPoly(6)
    for g, e in eps.items():
        for s, p in P.terms.items():
            avg.add(conj_action(g, s), p.scale(F(e, 48)))
    assert avg.is_zero()


def test_antisymmetrize_g6_projector():
    from jdcalc.permweights import antisymmetrize_G6
    ys = y_basis()
    for y in ys[:2]:
        assert antisymmetrize_G6(y) == y
    # an eps-odd element dies
    eps = epsilon_G6()
    from jdcalc.permweights import conj_action
    c = cycles_to_perm(6, [(1, 2, 3, 4, 5, 6)])
    g0 = cycles_to_perm(6, [(1, 2)])
    P = PermPoly(6)
    P.add(c, QD.one())
    P.add(conj_action(g0, c), QD.one().scale(-eps[g0]))
    assert antisymmetrize_G6(P).is_zero()


def test_f6_and_delete_leg():
    ys = y_basis()
    assert f6_map(ys[0]).is_zero()
    assert f6_map(ys[3]).is_zero()
    assert f6_map(ys[1]) == f6_map(ys[2])
    assert not f6_map(ys[1]).is_zero()
    # delete_leg puts a D on fixed points
    P = PermPoly(2)
    P.add((0, 1), QD.one())
    out = delete_leg(P, 2)
    assert out.terms[(0,)] == QD.monomial((1,), F(1))


def test_glue_with_identity_strands():
    rng = random.Random(8)
    d = random_diagram(rng, 4, 2)
    P = phi_gl(d)
    from jdcalc.diagrams import strand_diagram
    Q = phi_gl(strand_diagram(4))
    assert sigma_compose(P, 0, 4, Q, 4) == P


def test_char_from_perm_values():
    t = DiagramSum.single(triangle_diagram())
    unit = DiagramSum.single(tripod_diagram())
    assert format_poly(char_from_perm(unit, "sl")) == "1"
    assert format_poly(char_from_perm(unit, "osp")) == "1"
    assert format_poly(char_from_perm(t, "sl")) == "1 * d"
    assert format_poly(char_from_perm(t, "osp")) == "1 * d + -2 * a"
    # chi_sl is beta-even: degree-2 element t^2 has only d^2
    t2 = insert_lambda(t, t, 0)
    assert format_poly(char_from_perm(t2, "sl")) == "1 * d^2"
    with pytest.raises(DiagramError):
        char_from_perm(DiagramSum.single(wheel_diagram(4)), "sl")
