"""The acceptance gate: one test per criterion, exact tolerances.

Each test prints a PASS line on success; failures carry the exact residue
in the assertion message.  Everything is exact arithmetic, so tolerance is
equality unless a runtime bound is part of the criterion.
"""

import time
from fractions import Fraction as F

import pytest

from jdcalc import suites
from jdcalc import characters as ch
from jdcalc import generators as gen
from jdcalc import tensorweights as tw
from jdcalc import permweights as pw
from jdcalc.superalgebras import build_algebra
from jdcalc.diagrams import insert_lambda


def _run(name, fn, time_bound=None):
    t0 = time.time()
    ok, detail = fn()
    spent = time.time() - t0
    assert ok, "%s: %s" % (name, detail)
    if time_bound is not None:
        assert spent < time_bound, "%s took %.1fs (bound %.0fs)" % (
            name, spent, time_bound)
    print("PASS %-24s %7.1fs  %s" % (name, spent, detail))


def test_criterion_01_sigma6_dimension():
    _run("1 sigma6-subspace", suites.check_sigma6_dimension, time_bound=10.0)


def test_criterion_02_f6_values():
    _run("2 f6-values", suites.check_f6_values)


def test_criterion_03_d4_gluing():
    _run("3 d4-constants", suites.check_d4_constants)


def test_criterion_04_d2_identities():
    _run("4 d2-identities", suites.check_d2_identities)


def test_criterion_05_oracle_equivalence():
    t0 = time.time()
    _run("5a oracle-gl", suites.check_oracle_gl)
    _run("5b oracle-osp", suites.check_oracle_osp)
    assert time.time() - t0 < 300, "oracle suite exceeded five minutes"


def test_criterion_06_relation_vanishing():
    _run("6 relations", suites.check_relations)


def test_criterion_07_eq1_spectra():
    _run("7 eq1-spectra", suites.check_eq1)


def test_criterion_08_hilbert_determinant():
    _run("8 hilbert-determinant", suites.check_hilbert)


def test_criterion_09_kernel_of_f():
    rep = ch.f_kernel_report(12)
    bad = [r for r in rep if not r["match"]]
    assert not bad, "kernel mismatch at %s" % bad
    print("PASS %-24s          ker f = (P_sl P_osp) per degree <= 12"
          % "9 f-kernel")


def test_criterion_10_cartesian_squares():
    _run("10 squares", suites.check_squares)


def test_criterion_11_character_glue():
    _run("11 glue", suites.check_glue)


def test_criterion_12_annihilators():
    _run("12 annihilators", suites.check_annihilators)


def test_criterion_13_generating_function():
    _run("13 genfun", suites.check_genfun, time_bound=600.0)
