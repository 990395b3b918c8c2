import json
import os

import pytest

from boothlem.cli import main


def run(args):
    return main(args)


def test_radius_bk_alpha1(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run(["radius", "--class", "bk", "--alpha", "1",
                "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert abs(data["radius"] - 0.6180339887498949) < 1e-10
    assert data["tool"] == "boothlem"
    assert "tolerances" in data and "config" in data and "version" in data


def test_radius_bs_json(tmp_path):
    out = tmp_path / "r.json"
    assert run(["radius", "--class", "bs", "--alpha", "0.5",
                "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["radius"] == min(data["r_prime"], data["r_doubleprime"])


def test_radius_sweep_emits_csv_and_figure(tmp_path):
    out = tmp_path / "sweep.csv"
    assert run(["radius", "--class", "bs", "--sweep", "--step", "0.25",
                "--format", "svg", "--output", str(out)]) == 0
    assert out.exists()
    assert (tmp_path / "sweep.svg").exists()
    header = out.read_text().splitlines()[0]
    assert header.startswith("alpha,radius,r_prime,r_doubleprime")


def test_verify_bounds_exit_zero(tmp_path):
    out = tmp_path / "v.json"
    assert run(["verify", "bounds", "--class", "bs", "--alpha", "0.3",
                "--seed", "7", "--samples", "300", "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert all(c["holds"] for c in data["checks"])
    row = data["checks"][0]["rows"][0]
    assert abs(row["max_observed"][2] - 1 / 3) <= 1e-9


def test_verify_bounds_bk(tmp_path):
    out = tmp_path / "v.json"
    assert run(["verify", "bounds", "--class", "bk", "--alpha", "0.75",
                "--seed", "7", "--samples", "300", "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["checks"][0]["rows"][0]["bounds"][2] == pytest.approx(2.5 / 24)


def test_norm_commands(tmp_path):
    out = tmp_path / "n.json"
    assert run(["norm", "--function", "g1", "--alpha", "0.5",
                "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert abs(data["estimate"]["value"] - 1.0) <= 1e-4
    assert run(["norm", "--function", "f1", "--alpha", "0.5",
                "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["estimate"]["diverged"]
    assert run(["norm", "--function", "identity", "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["estimate"]["value"] == 0.0


def test_norm_sample_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["norm", "--function", "sample", "--alpha", "0.4", "--seed", "11",
            "--order", "24"]
    assert run(args + ["--output", str(a)]) == 0
    assert run(args + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_coeffs_json(tmp_path):
    out = tmp_path / "c.json"
    assert run(["coeffs", "--function", "f1", "--alpha", "0.5", "--order", "8",
                "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["taylor"]["2"] == [1.0, 0.0]
    assert data["taylor"]["4"] == [pytest.approx(1 / 3), 0.0]
    assert data["log_coefficients"]["1"] == [0.5, 0.0]


def test_coeffs_csv(tmp_path):
    out = tmp_path / "c.csv"
    assert run(["coeffs", "--function", "g1", "--alpha", "0.25", "--order", "8",
                "--format", "csv", "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,re_a_n,im_a_n,re_gamma_nm1,im_gamma_nm1"
    assert len(lines) == 8  # header + a_2..a_8


def test_plot_domain(tmp_path):
    out = tmp_path / "dom.csv"
    assert run(["plot-domain", "--alpha", "0.25", "--format", "svg",
                "--output", str(out)]) == 0
    assert out.exists() and (tmp_path / "dom.svg").exists()
    body = (tmp_path / "dom.svg").read_text()
    assert "<svg" in body


def test_plot_domain_byte_reproducible(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert run(["plot-domain", "--alpha", "0.5", "--format", "svg",
                    "--output", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()


def test_refute_cho_exit_zero_on_discrepancy(tmp_path):
    out = tmp_path / "cho.csv"
    assert run(["refute-cho", "--output", str(out)]) == 0
    assert out.exists() and (tmp_path / "cho.svg").exists()
    lines = out.read_text().splitlines()
    assert lines[0].startswith("alpha,cho_root,conjectured_radius")
    assert len(lines) == 12  # header + 11 alphas


def test_all_checks_small(tmp_path):
    out = tmp_path / "all.json"
    assert run(["all-checks", "--seed", "3", "--samples", "200",
                "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["all_hold"]
    assert len(data["checks"]) == 8


def test_all_checks_byte_reproducible(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run(["all-checks", "--seed", "3", "--samples", "100",
                    "--output", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_bad_config_exit_two():
    assert run(["radius", "--class", "bs", "--alpha", "1.5"]) == 2
    assert run(["norm", "--function", "g1", "--order", "4"]) == 2
    assert run(["verify", "bounds", "--samples", "0"]) == 2


def test_worker_cap_env(tmp_path, monkeypatch):
    monkeypatch.setenv("BOOTH_GFT_THREADS", "4")
    out = tmp_path / "all.json"
    assert run(["all-checks", "--seed", "3", "--samples", "50",
                "--output", str(out)]) == 0
    assert json.loads(out.read_text())["workers"] == 4
