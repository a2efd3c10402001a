import os
from fractions import Fraction as F

import pytest

from jdcalc.generators import (generator, x_n, k0_element, k1_element,
                               k2_element, k3_element, specialize_sum,
                               antisymmetrize3, psi_power)
from jdcalc.diagrams import (DiagramSum, DiagramError, canonicalize,
                             FrozenDiagram, is_totally_antisymmetric,
                             insert_lambda)
from jdcalc.permweights import char_from_perm
from jdcalc.exactalg import RINGS, format_poly, Poly
from jdcalc.io import load_input

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "jdcalc", "data")


def test_generator_catalogue_loads():
    for name in ("tripod_unit", "t", "theta", "d", "D1", "D2", "D3", "D4",
                 "K0", "K1", "K2", "K3"):
        assert generator(name) is not None
    for n in (1, 2, 3):
        generator("x_n", n)
    for n in (2, 3, 6):
        generator("wheel", n)
    generator("W_delta", 0, 2, 2)
    with pytest.raises(DiagramError):
        generator("nonsense")
    with pytest.raises(DiagramError):
        generator("x_n", 9)


def test_wheel_shape():
    for n in (2, 4, 7):
        w = generator("wheel", n)
        d = next(iter(w.terms)).diagram
        assert len(d.legs) == n and d.loops() == 1 and d.degree() == n


def test_t_and_unit_degree_in_lambda():
    t = generator("t")
    d = next(iter(t.terms)).diagram
    assert d.degree() - 2 == 1
    unit = generator("tripod_unit")
    assert next(iter(unit.terms)).diagram.degree() - 2 == 0


def test_x_family_characters():
    # chi(x1) = 2t and chi(x2) = t^2 at the sl specialization
    ring = RINGS["Q[d,b]"]
    assert char_from_perm(x_n(1), "sl") == ring.var("d").scale(2)
    assert char_from_perm(x_n(2), "sl") == ring.var("d") ** 2
    chi3 = char_from_perm(x_n(3), "sl")
    d, b = ring.var("d"), ring.var("b")
    assert chi3 == d ** 3 + (d * b).scale(12)
    ring2 = RINGS["Q[d,a]"]
    chi3o = char_from_perm(x_n(3), "osp")
    d2, a2 = ring2.var("d"), ring2.var("a")
    assert chi3o == d2 ** 3 - (d2 ** 2 * a2).scale(9) + (d2 * a2 ** 2).scale(54) \
        - (a2 ** 3).scale(104)


def test_x3_is_antisymmetric():
    assert is_totally_antisymmetric(x_n(3))


def test_k_elements_have_s_coefficients():
    for k in (k1_element(), k2_element(), k3_element()):
        assert any(isinstance(c, Poly) for c in k.terms.values())
    # K0 is a plain rational combination
    assert all(isinstance(c, F) for c in k0_element().terms.values())


def test_specialize_sum():
    K1 = specialize_sum(k1_element(), (F(2), F(0), F(0)))
    assert all(isinstance(c, F) for c in K1.terms.values())


def test_psi_power_degrees():
    for k in (0, 1, 3):
        d = psi_power(k)
        assert len(d.legs) == 4
        assert d.degree() == k + 2  # two strands contribute a - s = 2


def test_data_files_match_code():
    pairs = {
        "tripod": generator("tripod_unit"),
        "t": generator("t"),
        "theta": generator("theta"),
        "d": generator("d"),
        "D2": generator("D2"),
        "D1": generator("D1"),
        "D4": generator("D4"),
    }
    for name, want in pairs.items():
        got = load_input(os.path.join(DATA, name + ".jd"))
        assert (got - want).is_zero(), name
