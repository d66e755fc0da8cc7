import json
import subprocess
import sys

import pytest

from beamplace.bench.cli import main


def test_generate_solve_evaluate(tmp_path):
    sc, sol, ev = tmp_path / "sc.json", tmp_path / "sol.json", tmp_path / "ev.json"
    assert main(["generate", "--users", "30", "--seed", "4", "--out", str(sc)]) == 0
    for alg in ("tgbp", "bkmeans"):
        assert main(["solve", "--scenario", str(sc), "--algorithm", alg, "--out", str(sol), "--max-restarts", "20"]) == 0
        assert main(["evaluate", "--scenario", str(sc), "--solution", str(sol), "--out", str(ev)]) == 0
        doc = json.loads(ev.read_text())
        assert doc["format"] == "beamplace-evaluation"
        assert doc["min_scgnr_db"] <= doc["avg_scgnr_db"]
        assert len(doc["per_user_scgnr_db"]) == 30


def test_solve_overrides_carry_into_evaluate(tmp_path):
    sc, sol, ev = tmp_path / "sc.json", tmp_path / "sol.json", tmp_path / "ev.json"
    main(["generate", "--users", "20", "--out", str(sc)])
    assert main(["solve", "--scenario", str(sc), "--algorithm", "tgbp", "--out", str(sol), "--alpha-max-deg", "6", "--altitude-km", "1200"]) == 0
    doc = json.loads(sol.read_text())
    assert doc["alpha_max_deg"] == pytest.approx(6) and doc["altitude_km"] == 1200
    assert main(["evaluate", "--scenario", str(sc), "--solution", str(sol), "--out", str(ev)]) == 0
    assert max(json.loads(ev.read_text())["per_user_angle_deg"]) <= 3.0


def test_exact_solver_cli(tmp_path):
    sc, sol = tmp_path / "sc.json", tmp_path / "sol.json"
    main(["generate", "--users", "12", "--seed", "1", "--out", str(sc)])
    assert main(["solve", "--scenario", str(sc), "--algorithm", "exact", "--out", str(sol)]) == 0
    main(["generate", "--users", "20", "--out", str(sc)])
    assert main(["solve", "--scenario", str(sc), "--algorithm", "exact", "--out", str(sol)]) == 2


def test_exit_codes(tmp_path):
    assert main(["solve", "--scenario", str(tmp_path / "missing.json"), "--algorithm", "tgbp", "--out", str(tmp_path / "o")]) == 4
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["evaluate", "--scenario", str(bad), "--solution", str(bad), "--out", str(tmp_path / "o")]) == 4
    assert main(["generate", "--users", "0", "--out", str(tmp_path / "sc.json")]) == 2
    assert main(["solve", "--algorithm", "hcbp"]) == 2


def test_infeasible_exit_code(tmp_path, monkeypatch):
    from beamplace.bench import cli
    from beamplace.errors import Infeasible

    def boom(*a, **k):
        raise Infeasible("no clustering")

    monkeypatch.setattr(cli, "solve_scenario", boom)
    sc = tmp_path / "sc.json"
    main(["generate", "--users", "5", "--out", str(sc)])
    assert main(["solve", "--scenario", str(sc), "--algorithm", "bkmeans", "--out", str(tmp_path / "s")]) == 3


def test_bench_and_export_cdf(tmp_path):
    out = tmp_path / "run"
    assert main(["bench", "--users", "10,15", "--seeds", "3", "--algorithms", "tgbp,bkmeans", "--max-restarts", "20", "--out", str(out)]) == 0
    lines = (out / "report.csv").read_text().splitlines()
    assert len(lines) == 1 + 2 * 3 * 2
    cdf = tmp_path / "cdf.csv"
    assert main(["export-cdf", "--report", str(out / "report.csv"), "--metric", "avg_scgnr", "--out", str(cdf)]) == 0
    assert cdf.read_text().startswith("value_db,cumulative_fraction")


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "beamplace", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and "bench" in res.stdout
