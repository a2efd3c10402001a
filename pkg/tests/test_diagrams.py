import random
from fractions import Fraction as F

import pytest

from jdcalc.diagrams import (JacobiDiagram, DiagramSum, DiagramError,
                             canonicalize, FrozenDiagram, tripod_diagram,
                             triangle_diagram, theta_diagram, circle_diagram,
                             wheel_diagram, generalized_wheel, cup_diagram,
                             strand_diagram, compose, tensor, insert_lambda,
                             is_totally_antisymmetric, as_relation,
                             ihx_relation, stu_relation, relation_sum,
                             random_diagram)
from jdcalc.io import parse_jd, format_jd, parse_jds, ParseError


def rand_diag(rng, legs_choices=(0, 2, 3, 4), vmax=5):
    while True:
        legs = rng.choice(legs_choices)
        verts = rng.randrange(2, vmax + 1)
        if (legs + 3 * verts) % 2 == 0:
            return random_diagram(rng, legs, verts)


def test_degrees_and_loops():
    assert theta_diagram().degree() == 1
    assert theta_diagram().loops() == 2
    assert circle_diagram().degree() == 0
    assert triangle_diagram().degree() == 3  # degree 1 as a Lambda element
    w = wheel_diagram(5)
    assert w.degree() == 5 and w.loops() == 1 and w.n_legs() == 5


def test_tadpole_vanishes():
    tad = JacobiDiagram([0], [(1, 2, 3)], {0: 1, 1: 0, 2: 3, 3: 2})
    _, sign = canonicalize(tad)
    assert sign == 0


def test_vertex_reversal_is_minus():
    d = theta_diagram()
    flipped = JacobiDiagram(d.legs, [d.vertices[0],
                                     (d.vertices[1][0], d.vertices[1][2],
                                      d.vertices[1][1])], d.pairing)
    c0, s0 = canonicalize(d)
    c1, s1 = canonicalize(flipped)
    assert FrozenDiagram(c0) == FrozenDiagram(c1)
    assert s0 == -s1


def test_canonical_invariance_under_relabeling():
    rng = random.Random(7)
    for _ in range(100):
        d0 = rand_diag(rng)
        c0, s0 = canonicalize(d0)
        hs = list(d0.pairing)
        perm = hs[:]
        rng.shuffle(perm)
        m = dict(zip(hs, perm))

        def rot(v):
            k = rng.randrange(3)
            return tuple(v[k:] + v[:k])

        d1 = JacobiDiagram([m[h] for h in d0.legs],
                           [rot(tuple(m[h] for h in v)) for v in d0.vertices],
                           {m[h]: m[p] for h, p in d0.pairing.items()})
        c1, s1 = canonicalize(d1)
        assert FrozenDiagram(c0) == FrozenDiagram(c1) and s0 == s1
        c2, s2 = canonicalize(c0)
        assert FrozenDiagram(c2) == FrozenDiagram(c0) and s2 == 1


def test_compose_identity_and_circle():
    tri = triangle_diagram()
    back = compose(tri, 0, 3, strand_diagram(3), 3)
    assert (DiagramSum.single(back) - DiagramSum.single(tri)).is_zero()
    circ = compose(cup_diagram(), 0, 2, cup_diagram(), 0)
    assert circ.free_loops == 1 and circ.degree() == 0


def test_compose_associative():
    rng = random.Random(12)
    for _ in range(50):
        a = random_diagram(rng, 4, 2)
        b = random_diagram(rng, 4, 2)
        c = random_diagram(rng, 4, 2)
        ab_c = compose(compose(a, 2, 2, b, 2), 2, 2, c, 2)
        a_bc = compose(a, 2, 2, compose(b, 2, 2, c, 2), 2)
        ca, sa = canonicalize(ab_c)
        cb, sb = canonicalize(a_bc)
        assert FrozenDiagram(ca) == FrozenDiagram(cb) and sa == sb


def test_compose_degree_additive():
    rng = random.Random(3)
    for _ in range(20):
        a = random_diagram(rng, 3, 3)
        b = random_diagram(rng, 3, 3)
        comp = compose(a, 0, 3, b, 0)
        assert comp.degree() == a.degree() + b.degree() - 3


def test_tensor_and_degree_filter():
    from jdcalc.diagrams import caterpillar_tree
    a = tripod_diagram()
    b = theta_diagram()
    tb = tensor(a, b)
    assert tb.n_legs() == 3 and tb.degree() == a.degree() + b.degree()
    cat = caterpillar_tree(6)
    assert cat.degree() == 5 and cat.loops() == 0
    s = DiagramSum.single(a) + DiagramSum.single(tb)
    assert len(s.degree_filter(a.degree())) == 1
    assert len(s.degree_filter(tb.degree())) == 1
    assert s.degree_filter(99).is_zero()


def test_insertion_unit():
    unit = DiagramSum.single(tripod_diagram())
    th = DiagramSum.single(theta_diagram())
    assert (insert_lambda(unit, th, 0) - th).is_zero()


def test_insertion_requires_vertex():
    unit = DiagramSum.single(tripod_diagram())
    with pytest.raises(DiagramError):
        insert_lambda(unit, DiagramSum.single(cup_diagram()), 0)


def test_antisymmetry_checks():
    assert is_totally_antisymmetric(DiagramSum.single(tripod_diagram()))
    assert is_totally_antisymmetric(DiagramSum.single(triangle_diagram()))
    t = DiagramSum.single(triangle_diagram())
    tt = insert_lambda(t, t, 0)
    assert not is_totally_antisymmetric(tt)


def test_as_relation_collapses():
    rng = random.Random(5)
    for _ in range(10):
        d = rand_diag(rng, legs_choices=(2, 3))
        assert relation_sum(d, 0, "AS").is_zero()


def test_generalized_wheel_shape():
    gw = generalized_wheel(2, 1, 1)
    assert gw.n_legs() == 4 and gw.loops() == 2


def test_stu_needs_skeleton():
    with pytest.raises(DiagramError):
        stu_relation(theta_diagram(), 0)


def test_jd_round_trip():
    for d in (tripod_diagram(), theta_diagram(), wheel_diagram(4),
              circle_diagram()):
        text = format_jd(d)
        d2 = parse_jd(text)
        c0, s0 = canonicalize(d)
        c1, s1 = canonicalize(d2)
        assert FrozenDiagram(c0) == FrozenDiagram(c1) and s0 == s1
        assert format_jd(d2) == text


def test_jd_parse_errors_carry_location():
    with pytest.raises(ParseError) as err:
        parse_jd("legs 1\nvertex 1: a b\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_jd("legs 1\nleg 1: a\nedge a a\n")


def test_jds_parse():
    s = parse_jds("1/6 * D2\n")
    assert len(s) == 1
    coeff = next(iter(s.terms.values()))
    assert coeff == F(1, 6)
    with pytest.raises(ParseError):
        parse_jds("nonsense line\n")
