import csv
import io
import json
import math
import subprocess
import sys

import pytest

from spfkit.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def coeff_file(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps([0.5**k for k in range(1, 13)]))
    return str(path)


def test_pade_csv_layout(capsys, coeff_file):
    code, out, err = run_cli(capsys, "pade", "--f", coeff_file, "--n", "4")
    assert code == 0
    assert err == ""
    rows = list(csv.reader(io.StringIO(out)))
    header, body = rows[0], rows[1:]
    assert header[:2] == ["n", "k"]
    assert "pole_re" in header and "pole_im" in header
    assert "residual" in header
    assert len(body) == 4
    widths = {len(r) for r in rows}
    assert len(widths) == 1  # rectangular
    # every imaginary cell carries the trailing i
    im_col = header.index("pole_im")
    assert all(r[im_col].endswith("i") for r in body)
    res_col = header.index("residual")
    assert max(float(r[res_col]) for r in body) < 1e-9


def test_pade_json_mirrors_fields(capsys, coeff_file):
    code, out, _ = run_cli(capsys, "pade", "--f", coeff_file, "--n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "pade"
    assert doc["n"] == 3
    assert len(doc["poles"]) >= 1
    assert set(doc["coefficients"]) == {"target", "match", "residual"}


def test_byte_identical_reruns(capsys, coeff_file):
    args = ("remez", "--c", "0.3", "--n", "3", "--format", "json")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    args = ("prony", "--s", "4,-1,7,5")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_remez_json_contract(capsys):
    code, out, _ = run_cli(capsys, "remez", "--c", "0.3", "--n", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["converged"]
    assert doc["in_guarantee_regime"]
    lo, hi = doc["bound"]
    assert lo <= doc["deviation"] <= hi
    assert doc["alternance"]["count"] == 6
    assert len(doc["poles"]) == 5
    c, n = 0.3, 5
    want_hi = 2 * (1 + c) * math.exp(2 * c) * c ** (n + 1) / (2 ** (n - 1) * math.factorial(n))
    assert hi == pytest.approx(want_hi, rel=1e-12)


def test_suite_single_criterion(capsys):
    code, out, _ = run_cli(capsys, "suite", "--criteria", "14", "--seed", "42",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["seed"] == 42
    assert doc["all_passed"] is True
    assert [c["id"] for c in doc["criteria"]] == [14]
    assert doc["criteria"][0]["passed"] is True


def test_metrics_subcommand(capsys):
    code, out, _ = run_cli(capsys, "metrics", "--poles=1j,2+0.5j", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["notch_points"]) == 4
    assert doc["l2_quadrature"]["mu_form"] == pytest.approx(
        doc["l2_quadrature"]["nu_form"], rel=1e-9)
    names = {c["name"] for c in doc["checks"]}
    assert "two_sided_lower" in names


def test_parameter_errors_exit_2(capsys, coeff_file):
    cases = [
        ("const", "--c", "0", "--n", "3"),
        ("remez", "--n", "4"),                      # missing --c
        ("metrics", "--poles=1-1j"),                # wrong half-plane
        ("extremal", "--n", "3"),                   # neither omega nor delta
        ("extremal", "--omega", "2", "--delta", "0.5", "--n", "3"),
        ("prony", "--s", "1,2,3"),                  # odd moment count
        ("regdiff", "--n", "2"),
        ("pade", "--f", coeff_file, "--n", "0"),
        ("hsum", "--op", "extrap", "--n", "4"),     # missing --a
    ]
    for args in cases:
        code, out, err = run_cli(capsys, *args)
        assert code == 2, args
        assert err.startswith("parameter error:"), args


def test_config_file_defaults_and_override(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"c": 0.4, "n": 4, "format": "json"}))
    code, out, _ = run_cli(capsys, "--config", str(cfg), "const")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 4 and doc["c"] == 0.4
    code, out, _ = run_cli(capsys, "--config", str(cfg), "const", "--n", "7")
    doc = json.loads(out)
    assert doc["n"] == 7  # explicit flag wins


def test_config_file_invalid(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, _, err = run_cli(capsys, "--config", str(bad), "const", "--c", "0.3", "--n", "2")
    assert code == 2
    assert err.startswith("config error:")


def test_out_file_crlf(tmp_path, capsys):
    target = tmp_path / "nodes.csv"
    code, out, _ = run_cli(capsys, "hsum", "--op", "int", "--n", "3",
                           "--out", str(target))
    assert code == 0
    assert out == ""
    raw = target.read_bytes()
    assert b"\r\n" in raw
    rows = list(csv.reader(io.StringIO(raw.decode())))
    assert rows[0][0] == "op"


def test_interp_reports_unsolvable(capsys):
    r2, r3 = math.sqrt(2), math.sqrt(3)
    nodes = ",".join(repr(x) for x in (r2, -r2, 1 / r3, -1 / r3, 0.0))
    values = ",".join(repr(x) for x in (3 * r2, -3 * r2, r3, -r3, 1.0))
    code, out, _ = run_cli(capsys, "interp", "--nodes=" + nodes,
                           "--values=" + values, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ordinary_status"] == "unsolvable"
    assert doc["ordinary"] is None
    assert len(doc["basis"]) == 2


def test_thread_cap_env(coeff_file):
    proc = subprocess.run(
        [sys.executable, "-m", "spfkit.cli", "pade", "--f", coeff_file, "--n", "3"],
        capture_output=True, text=True, env={"PATH": "/usr/bin:/bin", "SPFKIT_THREADS": "1"},
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("n,k,")
