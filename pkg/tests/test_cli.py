import json
import math
import subprocess
import sys

import numpy as np
import pytest

from softedge.cli import main
from softedge.curveio import read_curve_csv, write_xy_csv


def run_cli(*args):
    return main([str(a) for a in args])


def test_simulate_gap_edge_normalization(tmp_path):
    out = tmp_path / "gap.csv"
    rc = run_cli("simulate", "--beta", 2, "--n", 24, "--samples", 4000,
                 "--seed", 3, "--observable", "gap", "--rescaling", "edge",
                 "--output", out)
    assert rc == 0
    curve, meta = read_curve_csv(out)
    width = curve.x[1] - curve.x[0]
    total = float(np.sum(curve.y) * width)
    oor = meta["out_of_range"] / meta["samples"]
    assert total == pytest.approx(1.0 - oor, abs=1e-12)
    assert meta["observable"] == "gap" and meta["rescaling"] == "edge"


def test_simulate_reproducible_bytes(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["simulate", "--beta", 1, "--n", 16, "--samples", 3000, "--seed", 7,
            "--observable", "dos"]
    assert run_cli(*args, "--output", a) == 0
    assert run_cli(*args, "--output", b) == 0
    assert a.read_bytes() == b.read_bytes()


def test_simulate_workers_do_not_change_bytes(tmp_path):
    a, b = tmp_path / "w1.csv", tmp_path / "w2.csv"
    args = ["simulate", "--beta", 2, "--n", 16, "--samples", 12000, "--seed", 11,
            "--observable", "gap"]
    assert run_cli(*args, "--workers", 1, "--output", a) == 0
    assert run_cli(*args, "--workers", 3, "--output", b) == 0
    assert a.read_bytes() == b.read_bytes()


def test_simulate_conditional_window(tmp_path):
    out = tmp_path / "cond.csv"
    rc = run_cli("simulate", "--beta", 2, "--n", 24, "--samples", 6000,
                 "--seed", 5, "--observable", "gap", "--rescaling", "edge",
                 "--window", 0.5, "--output", out)
    assert rc == 0
    curve, meta = read_curve_csv(out)
    assert 0 < meta["n_samples_accepted"] < meta["samples"]
    width = curve.x[1] - curve.x[0]
    mass = float(np.sum(curve.y) * width)
    oor = meta["out_of_range"] / meta["n_samples_accepted"]
    assert mass == pytest.approx(1.0 - oor, abs=1e-12)


def test_simulate_usage_errors(tmp_path):
    assert run_cli("simulate", "--beta", -1, "--n", 10,
                   "--output", tmp_path / "x.csv") == 2
    assert run_cli("simulate", "--beta", 2, "--n", 10, "--observable", "density",
                   "--rescaling", "edge", "--output", tmp_path / "x.csv") == 2
    assert run_cli("simulate", "--beta", 2, "--n", 10, "--observable", "density",
                   "--window", 0.1, "--output", tmp_path / "x.csv") == 2


def test_exact_f2_table(tmp_path):
    out = tmp_path / "table.csv"
    assert run_cli("exact", "--function", "f2-table", "--output", out) == 0
    rows = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
    assert rows[0] == "x,q,q_prime,R,I,F2"
    data = np.array([[float(v) for v in r.split(",")] for r in rows[1:]])
    f2 = data[:, 5]
    assert f2[0] < 1e-8 and 1 - f2[-1] < 1e-8
    q = data[:, 1]
    assert np.all(q > 0) and np.all(np.diff(q) < 0)


def test_exact_rho_edge_curve(tmp_path):
    out = tmp_path / "rho.csv"
    assert run_cli("exact", "--function", "rho-edge", "--r-max", 5,
                   "--points", 26, "--output", out) == 0
    curve, meta = read_curve_csv(out)
    assert curve.y[0] == 0.0
    assert curve.y[-1] == pytest.approx(math.sqrt(5.0) / math.pi, rel=0.2)


def _extrema_count(y):
    d = np.diff(y)
    signs = np.sign(d[np.abs(d) > 1e-10])
    return int(np.sum(signs[1:] != signs[:-1]))


def test_exact_edge_density_beta4_oscillations(tmp_path):
    # beta = 4 oscillates visibly on [-6, 0]; beta = 1 and 2 are monotone there
    counts = {}
    for beta in (1, 2, 4):
        out = tmp_path / f"ed{beta}.csv"
        assert run_cli("exact", "--function", "edge-density", "--beta", beta,
                       "--x-min", -6, "--x-max", 0, "--points", 241,
                       "--output", out) == 0
        curve, _ = read_curve_csv(out)
        counts[beta] = _extrema_count(curve.y)
    assert counts[4] >= 2
    assert counts[1] == 0 and counts[2] == 0


def test_exact_unsupported_combinations(tmp_path):
    assert run_cli("exact", "--function", "edge-density", "--beta", 3,
                   "--output", tmp_path / "x.csv") == 2
    assert run_cli("exact", "--function", "rho-edge", "--beta", 1,
                   "--output", tmp_path / "x.csv") == 2
    assert run_cli("exact", "--function", "asymptote", "--kind", "dos-small",
                   "--beta", 1, "--output", tmp_path / "x.csv") == 2


def test_compare_file_with_itself(tmp_path, capsys):
    out = tmp_path / "c.csv"
    write_xy_csv(out, [0.0, 1.0, 2.0], [1.0, 2.0, 3.0], {"command": "exact"})
    rc = run_cli("compare", out, out, "--sup-tol", 1e-12)
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["pass"] is True
    assert report["metrics"]["sup"] == 0.0


def test_compare_threshold_failure(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_xy_csv(a, [0.0, 1.0], [1.0, 1.0], {})
    write_xy_csv(b, [0.0, 1.0], [1.3, 1.3], {})
    assert run_cli("compare", a, b, "--sup-tol", 0.1) == 1


def test_compare_disjoint_ranges(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_xy_csv(a, [0.0, 1.0], [1.0, 1.0], {})
    write_xy_csv(b, [5.0, 6.0], [1.0, 1.0], {})
    assert run_cli("compare", a, b) == 2


def test_oracle_cli_normalization(tmp_path):
    out = tmp_path / "oracle.csv"
    assert run_cli("oracle", "--beta", 2, "--n", 2, "--observable", "gap",
                   "--r-max", 8, "--points", 801, "--output", out) == 0
    curve, _ = read_curve_csv(out)
    mass = np.trapezoid(curve.y, curve.x)
    assert mass == pytest.approx(1.0, abs=1e-6)


def test_oracle_rejects_large_n(tmp_path):
    assert run_cli("oracle", "--beta", 2, "--n", 4,
                   "--output", tmp_path / "x.csv") == 2


def test_output_dir_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("SOFTEDGE_OUTDIR", str(tmp_path))
    assert run_cli("exact", "--function", "shifted-wigner", "--x-max", 3,
                   "--points", 7, "--output", "sw.csv") == 0
    assert (tmp_path / "sw.csv").exists()


def test_argparse_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["simulate"])  # missing required flags
    assert exc.value.code == 2


def test_console_script_smoke(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "softedge.cli", "exact", "--function", "wigner",
         "--x-min", "-2", "--x-max", "2", "--points", "11",
         "--output", str(tmp_path / "w.csv")],
        capture_output=True, text=True)
    assert res.returncode == 0
    curve, _ = read_curve_csv(tmp_path / "w.csv")
    assert curve.y[5] == pytest.approx(math.sqrt(2.0) / math.pi)
