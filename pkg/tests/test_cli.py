import csv
import io
import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from maslov.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- newton ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "dim, text, vertices",
    [
        ("1", "x1^3 + 2*x1 + 1", [["0"], ["3"]]),
        ("2", "x1*x2", [["1", "1"]]),
        ("2", "x1 + x2 + 1", [["0", "0"], ["0", "1"], ["1", "0"]]),
        ("1", "x^(1/2) - 3*x^(-3/4)", [["-3/4"], ["1/2"]]),
    ],
)
def test_newton_examples(capsys, dim, text, vertices):
    code, out, _ = run(capsys, "newton", "-n", dim, text)
    assert code == 0
    assert json.loads(out) == {"schema": "polytope/1", "dim": int(dim), "vertices": vertices}


def test_newton_csv(capsys):
    code, out, _ = run(capsys, "newton", "-n", "2", "x1^2 + x2", "--format", "csv")
    assert code == 0
    assert out == "d1,d2\n0,1\n2,0\n"


def test_newton_parse_error_has_caret(capsys):
    code, out, err = run(capsys, "newton", "-n", "1", "x1 +* 2")
    assert code == 2 and out == ""
    assert "column 5" in err
    assert err.splitlines()[-1] == "      ^"


def test_newton_zero_polynomial(capsys):
    code, out, err = run(capsys, "newton", "-n", "1", "x1 - x1")
    assert code == 3 and out == "" and "zero" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["newton", "x1"],
        ["newton", "-n", "1"],
        ["newton", "-n", "1", "x1", "x1"],
        ["newton", "-n", "1", "x1", "--format", "svg"],
        ["newton", "-n", "1", "x2"],
    ],
)
def test_newton_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_output_file(tmp_path, capsys):
    path = tmp_path / "n.json"
    code, out, _ = run(capsys, "newton", "-n", "1", "x1 + 1", "-o", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["vertices"] == [["0"], ["1"]]


# -- dequantize -------------------------------------------------------------------


def test_dequantize_csv_errors_are_h_log_2(capsys):
    code, out, _ = run(capsys, "dequantize", "-n", "1", "x1 + 1", "--point", "0", "--format", "csv")
    assert code == 0
    assert "\r" not in out
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["point_index", "h", "value", "reference", "abs_error"]
    assert len(rows) == 20
    for row in rows:
        assert float(row["abs_error"]) == pytest.approx(float(row["h"]) * math.log(2), rel=1e-12)


def test_dequantize_json_constant(capsys):
    code, out, _ = run(capsys, "dequantize", "-n", "1", "5", "--point", "3.5")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "probe/1"
    (pt,) = doc["points"]
    for h, v in zip(doc["h"], pt["values"]):
        assert v == pytest.approx(h * math.log(5), rel=1e-12)
    assert pt["reference"] == 0
    assert pt["slope"] == pytest.approx(1.0, abs=1e-9)


def test_dequantize_limit_and_slope(capsys):
    code, out, _ = run(capsys, "dequantize", "-n", "1", "x1^2 + x1 + 1", "--point", "1")
    doc = json.loads(out)
    assert abs(doc["points"][0]["limit"] - 2) < 1e-6
    assert doc["slope"] is not None


def test_dequantize_nonfinite_values_are_reported_not_fatal(capsys):
    code, out, _ = run(capsys, "dequantize", "-n", "1", "x1 - 1", "--point", "0", "--steps", "4")
    doc = json.loads(out)
    assert code == 0
    assert doc["points"][0]["values"] == ["-inf"] * 4
    assert doc["points"][0]["slope"] is None


def test_dequantize_random_points_are_seeded(capsys):
    args = ["dequantize", "-n", "2", "x1*x2 + x2^2 + 1", "--samples", "5", "--steps", "6"]
    _, a, _ = run(capsys, *args, "--seed", "3")
    _, b, _ = run(capsys, *args, "--seed", "3")
    _, c, _ = run(capsys, *args, "--seed", "4")
    assert a == b != c
    assert len(json.loads(a)["points"]) == 5


def test_dequantize_asymptotic_form(capsys):
    code, out, _ = run(capsys, "dequantize", "-n", "1", "x1*log(x1 + 3)", "--point", "1", "--steps", "30")
    doc = json.loads(out)
    assert code == 0
    assert doc["points"][0]["reference"] == 1
    assert abs(doc["points"][0]["limit"] - 1) < 1e-4


@pytest.mark.parametrize(
    "extra",
    [["--point", "1,2"], ["--point", "a"], ["--ratio", "1.5"], ["--steps", "0"], ["--samples", "0"]],
)
def test_dequantize_usage_errors(capsys, extra):
    code, out, _ = run(capsys, "dequantize", "-n", "1", "x1", *extra)
    assert code == 2 and out == ""


# -- check --------------------------------------------------------------------------


def test_check_cancellation_is_skipped_with_witness(capsys):
    code, out, _ = run(capsys, "check", "-n", "1", "x1", "-x1 + 1")
    assert code == 0
    assert "general_position=false" in out
    assert "FAIL" not in out
    lines = out.splitlines()
    assert any(line.startswith("SKIPPED newton_sum: hypothesis violated") for line in lines)
    assert "N(f+g) = {0} != {0, 1} = N(f) (+) N(g)" in out


def test_check_nonnegative_pair_all_pass(capsys):
    code, out, _ = run(capsys, "check", "-n", "1", "x1 + 1", "x1^2 + 2")
    assert code == 0
    statuses = [line.split()[0] for line in out.splitlines()[2:] if line[:1].isupper()]
    assert statuses and set(statuses) == {"PASS"}


def test_check_scalar_multiple(capsys):
    code, out, _ = run(capsys, "check", "-n", "1", "x1", "2*x1")
    assert code == 0 and "general_position=false" in out


def test_check_random_sweep(capsys):
    code, out, _ = run(capsys, "check", "--random", "25", "--seed", "7")
    assert code == 0
    assert "newton_sum:" in out and "FAIL" not in out
    code, nonneg, _ = run(capsys, "check", "--random", "25", "--nonneg")
    assert code == 0
    assert "0 skipped" in next(line for line in nonneg.splitlines() if "newton_sum" in line)


def test_check_usage_errors(capsys):
    assert run(capsys, "check", "-n", "1", "x1")[0] == 2
    assert run(capsys, "check", "-n", "1", "x1", "x1", "--random", "3")[0] == 2
    assert run(capsys, "check", "-n", "1", "x1", "x1 - x1")[0] == 3


# -- plot --------------------------------------------------------------------------


def test_plot_triangle(capsys):
    code, out, _ = run(capsys, "plot", "-n", "2", "x1 + x2 + 1")
    assert code == 0
    root = ET.fromstring(out)
    assert root.get("version") == "1.1"
    for label in ("(0, 0)", "(0, 1)", "(1, 0)"):
        assert label in out


def test_plot_two_polynomials_has_layers(capsys):
    code, out, _ = run(capsys, "plot", "-n", "2", "x1*x2", "x1^2")
    assert code == 0
    ids = {g.get("id") for g in ET.fromstring(out).iter("{http://www.w3.org/2000/svg}g")}
    assert {"f", "g", "oplus", "odot"} <= ids
    assert "(3, 1)" in out


def test_plot_wrong_dimension(capsys):
    code, out, _ = run(capsys, "plot", "-n", "3", "x1")
    assert code == 4 and out == ""


def test_plot_view_box_has_margin(capsys):
    _, out, _ = run(capsys, "plot", "-n", "2", "x1^10 + x2^10 + 1")
    x, y, w, h = map(float, ET.fromstring(out).get("viewBox").split())
    assert (x, w, h) == pytest.approx((-1, 12, 12))


# -- determinism -------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["newton", "-n", "2", "x1^(1/2)*x2 + x2^3 - 1"],
        ["dequantize", "-n", "2", "x1 + (1-2i)*x2^2", "--samples", "4", "--format", "csv"],
        ["check", "--random", "10", "--seed", "5"],
        ["plot", "-n", "2", "x1 + x2^2", "x1*x2 + 1"],
    ],
)
def test_outputs_are_byte_identical(capsys, argv):
    assert run(capsys, *argv) == run(capsys, *argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "maslov", "newton", "-n", "1", "x1 + 1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"schema":"polytope/1","dim":1,"vertices":[["0"],["1"]]}\n'
