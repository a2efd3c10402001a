import io
import os
import subprocess
import sys

import pytest

from jdcalc.cli import main

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "jdcalc", "data")


def run_cli(args, capsys):
    rc = main(args)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_weight_theta(capsys):
    rc, out, _ = run_cli(["weight", "--algebra", "gl:2",
                          os.path.join(DATA, "theta.jd")], capsys)
    assert rc == 0 and out.strip() == "12"


def test_weight_d21(capsys):
    rc, out, _ = run_cli(["weight", "--algebra", "d21:1",
                          os.path.join(DATA, "d.jd")], capsys)
    assert rc == 0 and out.strip() == "1"


def test_perm_d2_is_sixth_of_y1(capsys):
    rc, out, _ = run_cli(["perm", "--family", "gl",
                          os.path.join(DATA, "D2.jd")], capsys)
    assert rc == 0
    # the expansion of (1/6) y1: 16 six-cycle classes with unit coefficients
    assert "(1,2,3,4,5,6) : 1/1" in out
    assert len([l for l in out.splitlines() if l.strip()]) == 16


def test_char_t(capsys):
    rc, out, _ = run_cli(["char", "--family", "sl",
                          os.path.join(DATA, "t.jd")], capsys)
    assert rc == 0 and out.strip() == "1 * d"
    rc, out, _ = run_cli(["char", "--family", "osp",
                          os.path.join(DATA, "t.jd")], capsys)
    assert rc == 0 and out.strip() == "1 * d + -2 * a"


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.jd"
    bad.write_text("legs 2\nleg 1: a\nedge a\n")
    rc, _, err = run_cli(["weight", "--algebra", "gl:2", str(bad)], capsys)
    assert rc == 2 and "line" in err


def test_missing_file_exit_code(capsys):
    rc, _, err = run_cli(["weight", "--algebra", "gl:2", "/no/such.jd"], capsys)
    assert rc == 2


def test_jds_input(capsys):
    rc, out, _ = run_cli(["perm", "--family", "gl",
                          os.path.join(DATA, "x1.jds")], capsys)
    assert rc == 0 and "2/1" in out


def test_deterministic_output(capsys):
    args = ["perm", "--family", "osp", os.path.join(DATA, "t.jd")]
    rc1, out1, _ = run_cli(args, capsys)
    rc2, out2, _ = run_cli(args, capsys)
    assert rc1 == rc2 == 0 and out1 == out2


def test_tables(tmp_path, capsys):
    rc, out, _ = run_cli(["tables", "--max-degree", "2",
                          "--out", str(tmp_path)], capsys)
    assert rc == 0
    text = (tmp_path / "characters.tsv").read_text()
    assert text.startswith("degree\tfamily")
    assert "1 * d" in text
