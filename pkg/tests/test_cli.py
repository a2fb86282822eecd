import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from eulerpoly.cli import run
from eulerpoly.exactmath import parse_rational


def invoke(*argv):
    buf = io.StringIO()
    code = run(list(argv), stream=buf)
    return code, json.loads(buf.getvalue())


def rationals_in(node):
    if isinstance(node, str):
        try:
            yield node, parse_rational(node)
        except ValueError:
            pass
    elif isinstance(node, dict):
        for v in node.values():
            yield from rationals_in(v)
    elif isinstance(node, list):
        for v in node:
            yield from rationals_in(v)


def test_narayana_all_routes():
    code, out = invoke("narayana", "--d", "3", "--m", "2", "--route", "all")
    assert code == 0 and out["status"] == "PASS"
    assert out["outputs"]["coeffs"] == ["1", "3", "1"]
    assert out["outputs"]["palindromic"] is True
    assert out["outputs"]["catalan"] == "5"


def test_hatw_example():
    code, out = invoke("hatw", "--a", "1", "--blocks", "11/10:1,11/10:1")
    assert code == 0
    coeffs = [parse_rational(c) for c in out["outputs"]["coeffs"]]
    assert coeffs == [Fraction(121, 100), Fraction(78, 100), Fraction(1, 100)]


def test_hatw_raw_polynomial():
    code, out = invoke("hatw", "--a", "1", "--poly", "1/8,0,1")
    assert code == 0
    assert out["outputs"]["coeffs"] == ["1/8", "3/4", "9/8"]


def test_quad_region_shape():
    code, out = invoke("quad-region", "--a", "1", "--grid", "5")
    assert code == 0
    assert len(out["outputs"]) == 25
    assert all(set(cell) >= {"b", "c", "inside"} for cell in out["outputs"])


def test_tp_check_fail_carries_witness():
    seq = ",".join(f"{10 * n + 11}/10" for n in range(12))
    code, out = invoke("tp-check", "--seq", seq, "--max-order", "3")
    assert code == 1 and out["status"] == "FAIL"
    assert out["witness"]["value"] == "-1/10"
    assert out["witness"]["rows"] == [0, 1, 2] and out["witness"]["cols"] == [1, 2, 3]


def test_negative_values_after_flags():
    code, out = invoke("jp", "--alpha", "0,1/2", "--beta", "-3/2", "--n", "1,1")
    assert code == 0
    assert out["outputs"]["zones"]["gt_one"] == 1
    assert out["outputs"]["verdict"] == {"hypothesis": "unit_interval_but_one", "confirmed": True}


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--a", "5", "--blocks", "2:2"],
        ["m-eulerian", "--m", "2", "--n", "3"],
        ["mp-verify", "--kind", "second", "--delta", "1/2", "--epsilon", "3/4", "--rho", "7/3", "--blocks", "5/4:2"],
        ["mp-verify", "--delta", "1/2", "--epsilon", "1/3", "--rho", "5/2", "--blocks", "3/2:1"],
        ["gasper-check", "--n", "2", "--b", "1", "--c", "7", "--blocks", "1/2:1"],
        ["narayana-grid"],
        ["jp-narayana", "--d", "3", "--m", "2", "--variant", "beta_d_minus_1"],
        ["narayana", "--d", "4", "--m", "3", "--route", "explicit"],
    ],
)
def test_passing_commands_roundtrip(argv):
    code, out = invoke(*argv)
    assert code == 0 and out["status"] == "PASS"
    for text, value in rationals_in(out):
        assert parse_rational(text) == value
        assert "/" not in text or value.denominator != 1


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["hatw", "--a", "1.5"],
        ["hatw", "--a", "1", "--blocks", "1/2"],
        ["narayana", "--d", "1", "--m", "2"],
        ["mp-verify", "--delta", "1", "--epsilon", "1", "--rho", "-2"],
        ["gasper-check", "--n", "1", "--b", "2", "--c", "9", "--blocks", "2:1"],
        ["jp", "--alpha", "0", "--beta", "-2", "--n", "1"],
    ],
)
def test_errors_exit_two(argv):
    code, out = invoke(*argv)
    assert code == 2 and out["status"] == "ERROR"
    assert out["witness"]


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    code, out = invoke("m-eulerian", "--m", "1", "--n", "2", "--out", str(target))
    assert code == 0
    assert json.loads(target.read_text()) == out


def test_verify_paper(tmp_path):
    target = tmp_path / "acceptance.json"
    proc = subprocess.run(
        [sys.executable, "-m", "eulerpoly", "verify-paper", "--out", str(target)],
        capture_output=True,
        text=True,
        timeout=600,
    )
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["status"] == "PASS"
    assert json.loads(target.read_text()) == report
    assert proc.stderr.count("PASS") == 10
