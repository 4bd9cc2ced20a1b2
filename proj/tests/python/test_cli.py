import csv
import io
import json
import os
import subprocess
from pathlib import Path

import pytest

import hopnorms as h

CLI = os.environ.get("HOPNORMS_CLI", str(Path(__file__).resolve().parents[2] / "build" / "hopnorms"))

pytestmark = pytest.mark.skipif(not Path(CLI).exists(), reason="CLI binary not built")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def rows(out):
    return list(csv.DictReader(io.StringIO(out)))


def test_compute_matches_library_bit_for_bit():
    r = run("compute", "--family", "jacobi", "--alpha", "1", "--beta", "0", "--n", "1", "--op", "renyi", "--q", "2")
    assert r.returncode == 0, r.stderr
    (row,) = rows(r.stdout)
    assert float(row["value"]) == h.renyi_entropy(h.Family.jacobi(1, 0), 1, 2)

    r = run("compute", "--family", "hermite", "--n", "3", "--op", "weighted-norm", "--q", "2.5", "--normalized")
    (row,) = rows(r.stdout)
    lib = h.weighted_norm(h.Family.hermite(), 3, 2.5, normalized=True)
    assert float(row["log_value"]) == lib.value.log_abs
    assert float(row["rel_err_estimate"]) == lib.error_estimate


def test_compute_examples():
    (row,) = rows(run("compute", "--family", "hermite", "--n", "0", "--op", "weighted-norm", "--q", "4",
                      "--engine", "quadrature").stdout)
    assert float(row["value"]) == pytest.approx(0.886226925452758, rel=1e-12)
    assert float(row["rel_err_estimate"]) <= 1e-11
    (row,) = rows(run("compute", "--family", "laguerre", "--alpha", "2", "--n", "0", "--op", "laplace-x0").stdout)
    assert float(row["value"]) == pytest.approx(2.0, rel=1e-12)


def test_sweep_rows_and_order():
    r = run("sweep", "--family", "hermite", "--n", "2", "--op", "weighted-norm", "--grid", "q=25,50,100,200",
            "--engine", "quadrature,asymptotic-q")
    assert r.returncode == 0
    out = rows(r.stdout)
    assert [(row["q"], row["engine"]) for row in out] == [
        (q, e) for q in ("25", "50", "100", "200") for e in ("quadrature", "asymptotic-q")
    ]
    assert list(out[0].keys())[:10] == ["family", "n", "q", "alpha", "beta", "lambda", "engine", "sign", "log_value",
                                        "rel_err_estimate"]
    ratios = [abs(float(row["ratio"]) - 1) for row in out if row["engine"] == "asymptotic-q"]
    assert ratios == sorted(ratios, reverse=True)


def test_sweep_parameter_ratio_tends_to_one():
    r = run("sweep", "--family", "laguerre", "--n", "1", "--q", "2", "--op", "unweighted-norm", "--grid",
            "alpha=100:800:2", "--engine", "quadrature,asymptotic-parameter")
    out = [row for row in rows(r.stdout) if row["engine"] == "asymptotic-parameter"]
    assert [row["alpha"] for row in out] == ["100", "200", "400", "800"]
    err = [abs(float(row["ratio"]) - 1) for row in out]
    assert err == sorted(err, reverse=True) and err[-1] < 0.01
    # magnitudes beyond double range keep only the log columns
    assert out[-1]["value"] == "" and float(out[-1]["log_value"]) > 690


def test_determinism(tmp_path):
    args = ["sweep", "--family", "gegenbauer", "--lambda", "3.5", "--op", "unweighted-norm", "--grid", "n=0,1,2,3",
            "--grid", "q=2,4", "--engine", "quadrature,bell", "--format", "json"]
    a = run(*args, "--threads", "4").stdout
    assert run(*args, "--threads", "4").stdout == a
    serial = json.loads(run(*args, "--threads", "1").stdout)
    doc = json.loads(a)
    assert doc["rows"] == serial["rows"]
    assert doc["schema"] == 1 and len(doc["rows"]) == 16 and "invocation" in doc


def test_exit_codes(tmp_path):
    assert run("compute", "--family", "hermite", "--n", "1").returncode == 2
    assert run("compute", "--family", "jacobi", "--alpha", "1", "--n", "1", "--op", "shannon").returncode == 2
    assert run("sweep", "--family", "hermite", "--n", "2", "--op", "unweighted-norm", "--grid", "q=2,3",
               "--engine", "bell").returncode == 2
    assert run("compute", "--family", "hermite", "--n", "1", "--op", "unweighted-norm", "--q", "2",
               "--engine", "asymptotic-q").returncode == 3
    report = tmp_path / "r.json"
    r = run("validate", "paper-closed-forms", "--out", str(report))
    assert r.returncode == 0
    doc = json.loads(report.read_text())
    assert doc["schema"] == 1
    assert any(row["status"] == "documented-discrepancy" for row in doc["rows"])
    assert all(row["status"] != "fail" for row in doc["rows"])
