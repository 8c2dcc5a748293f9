import json
import logging
import subprocess
import sys

import pytest

from arcticcurve import arctic, output
from arcticcurve.cli import EXIT_FAILED, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main
from arcticcurve.params import params_from_phase
from arcticcurve.precision import PrecisionContext
from arcticcurve.validation import CheckResult

CTX = PrecisionContext(256)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_report(text):
    return dict(line.split(" = ", 1) for line in text.strip().splitlines())


def test_curve_csv_default(capsys):
    code, out, _ = run(capsys, "curve", "--delta", "-2", "--t", "1", "--format", "csv")
    assert code == EXIT_OK
    rows = output.read_csv(out)
    assert out.splitlines()[0] == "xi,x,y"
    assert len(rows) == 256
    xi, x, y = (float(v) for v in rows[0])
    assert xi < 1e-4 and y < 1e-8 and abs(x - 0.5) < 1e-3


def test_csv_roundtrip_at_printed_precision():
    por = arctic.curve_portion(params_from_phase(-3, 0.7, CTX), 16, CTX)
    text = output.to_csv([por])
    rows = output.read_csv(text)
    for row, pt in zip(rows, por.points):
        assert row == tuple(output.format_number(v) for v in (pt.xi, pt.x, pt.y))
        for s, v in zip(row, (pt.xi, pt.x, pt.y)):
            assert output.format_number(CTX.mp.mpf(s)) == s
            assert abs(CTX.mp.mpf(s) - v) <= CTX.mp.mpf(10) ** -19 * abs(v)


def test_format_number():
    assert output.format_number(0.5) == "5.0000000000000000000e-01"
    assert output.format_number(-12345.5) == "-1.2345500000000000000e+04"
    assert output.format_number(0) == "0.0000000000000000000e+00"


def test_curve_circle_json(capsys):
    code, out, _ = run(capsys, "curve", "--delta", "0", "--t", "1", "--format", "json", "--n-points", "32")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert set(doc) == {"params", "contact", "points"}
    assert set(doc["params"]) == {"delta", "t", "lambda", "eta", "regime"}
    assert doc["params"]["regime"] == "disordered"
    assert set(doc["contact"]) == {"x_axis", "y_axis"}
    assert len(doc["points"]) == 32
    for pt in doc["points"]:
        assert set(pt) == {"xi", "x", "y"}
        assert abs((pt["x"] - 0.5) ** 2 + (pt["y"] - 0.5) ** 2 - 0.25) < 1e-12


def test_curve_all_portions_json(capsys):
    code, out, _ = run(capsys, "curve", "--delta", "-3", "--t", "0.7", "--format", "json",
                       "--n-points", "8", "--portion", "all")
    doc = json.loads(out)
    assert code == EXIT_OK and len(doc["portions"]) == 4
    assert sorted(tuple(p["corner"]) for p in doc["portions"]) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_near_linear_curve(capsys):
    code, out, _ = run(capsys, "curve", "--delta", "-50", "--t", "1", "--n-points", "32")
    rows = [tuple(float(v) for v in r) for r in output.read_csv(out)]
    assert code == EXIT_OK and max(abs(x + y - 0.5) for _, x, y in rows) < 0.06


def test_svg_is_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.svg", tmp_path / "b.svg"]
    for path in paths:
        code, _, _ = run(capsys, "curve", "--delta", "-2", "--format", "svg", "--n-points", "16",
                         "--portion", "all", "--output", str(path))
        assert code == EXIT_OK
    a, b = (p.read_bytes() for p in paths)
    assert a == b
    text = a.decode()
    assert text.count("<polyline") == 4 and text.count("<circle") == 8
    assert 'viewBox="-0.050000 -0.050000 1.100000 1.100000"' in text
    assert "http" not in text.replace('xmlns="http://www.w3.org/2000/svg"', "")


def test_sweep_svg(capsys):
    code, out, _ = run(capsys, "sweep", "--deltas", "-1.5", "-2", "-5", "-10", "--n-points", "8")
    assert code == EXIT_OK
    assert out.count("<polyline") == 4 and out.count("<title>") == 4


def test_sweep_across_regimes_labels(capsys):
    code, out, _ = run(capsys, "sweep", "--deltas", "-2", "0.5", "--n-points", "8")
    assert code == EXIT_OK
    assert "anti-ferroelectric</title>" in out and "disordered</title>" in out


def test_sweep_empty_is_usage_error(capsys):
    assert run(capsys, "sweep", "--deltas")[0] == EXIT_USAGE


def test_finite_n(capsys):
    code, out, _ = run(capsys, "finite-n", "--n", "3", "--delta", "0.5", "--t", "1")
    rep = parse_report(out)
    assert code == EXIT_OK and abs(float(rep["Z_N / c^(N^2)"]) - 7) < 1e-25
    code, out, _ = run(capsys, "finite-n", "--n", "1", "--delta", "-2", "--t", "0.7")
    p = params_from_phase(-2, 0.7, CTX)
    c = CTX.mp.sinh(2 * p.eta)
    assert abs(CTX.mp.mpf(parse_report(out)["Z_N"]) - c) < 1e-25
    code, out, _ = run(capsys, "finite-n", "--n", "4", "--delta", "-2", "--xi", "0.2")
    assert code == EXIT_OK and "(1/N) dlog h_N" in parse_report(out)


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--delta", "0.5", "--t", "1")
    assert code == EXIT_OK and abs(float(parse_report(out)["Z_N / c^(N^2)"]) - 429) < 1e-20
    code, _, err = run(capsys, "enumerate", "--n", "12", "--delta", "0.5")
    assert code == EXIT_NUMERIC and "CapacityError" in err


def test_precision_escalation_is_logged(capsys, caplog):
    caplog.set_level(logging.INFO, logger="arcticcurve")
    code, _, _ = run(capsys, "-v", "finite-n", "--n", "24", "--delta", "-2", "--precision-bits", "64")
    assert code == EXIT_OK and "precision escalation" in caplog.text


def test_escalation_reaches_stderr():
    proc = subprocess.run(
        [sys.executable, "-m", "arcticcurve.cli", "-v", "finite-n", "--n", "24", "--delta", "-2",
         "--precision-bits", "64"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "precision escalation" in proc.stderr


def test_env_precision(capsys, caplog, monkeypatch):
    caplog.set_level(logging.INFO, logger="arcticcurve")
    monkeypatch.setenv("ARCTIC_PRECISION_BITS", "64")
    code, _, _ = run(capsys, "finite-n", "--n", "24", "--delta", "-2")
    assert code == EXIT_OK and "64 and 128 bits" in caplog.text
    monkeypatch.setenv("ARCTIC_PRECISION_BITS", "lots")
    assert run(capsys, "finite-n", "--n", "2", "--delta", "-2")[0] == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["curve"],
        ["curve", "--delta", "1.5"],
        ["curve", "--delta", "-1"],
        ["curve", "--delta", "-2", "--t", "-1"],
        ["curve", "--delta", "-2", "--format", "png"],
        ["finite-n", "--n", "0", "--delta", "-2"],
        ["validate", "--only", "P9"],
        ["curve", "--delta", "-2", "--precision-bits", "8"],
        ["curve", "--delta", "-2", "--precision-bits", "60"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_validate_only_p4(capsys):
    code, out, err = run(capsys, "validate", "--only", "P4")
    report = json.loads(out)
    assert code == EXIT_OK and report["passed"]
    assert [c["check_id"] for c in report["checks"]] == ["P4"]
    assert set(report["checks"][0]) >= {"check_id", "status", "measured", "tolerance"}
    assert "P4: PASS" in err


def test_validate_exit_code_follows_results(capsys, monkeypatch):
    from arcticcurve import validation

    monkeypatch.setitem(validation.CHECKS, "P1", lambda ctx: CheckResult("P1", "fail", 1.0, 0.5))
    code, out, _ = run(capsys, "validate", "--only", "P1", "P4")
    assert code == EXIT_FAILED and not json.loads(out)["passed"]


def test_console_script_help():
    proc = subprocess.run(
        [sys.executable, "-m", "arcticcurve.cli", "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "finite-n" in proc.stdout
