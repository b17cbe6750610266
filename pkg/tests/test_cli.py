import json
import math
import subprocess
import sys

import numpy as np
import pytest

from mlsemigroup.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    lines = [ln for ln in text.strip().splitlines() if ln]
    header = lines[0].split(",")
    rows = [dict(zip(header, ln.split(","))) for ln in lines[1:]]
    return header, rows


class TestEval:
    def test_exponential_value(self, capsys):
        code, out, err = run_cli(capsys, ["eval", "--alpha", "1", "--z", "1"])
        assert code == 0
        _, rows = parse_csv(out)
        assert float(rows[0]["value"]) == pytest.approx(math.e, rel=1e-10)
        assert rows[0]["converged"] == "true"

    def test_domain_error_names_parameter(self, capsys):
        code, out, err = run_cli(capsys, ["eval", "--alpha", "1", "--z", "100"])
        assert code == 1
        assert "z_cap" in err

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--alpha", "1"])  # missing --z
        assert exc.value.code == 2
        assert "--z" in capsys.readouterr().err

    def test_unknown_command_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_max_terms_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("ML_MAX_TERMS", "5")
        code, out, _ = run_cli(capsys, ["eval", "--alpha", "0.5", "--z", "3"])
        assert code == 0
        _, rows = parse_csv(out)
        assert rows[0]["terms_used"] == "5"
        assert rows[0]["converged"] == "false"

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("ML_MAX_TERMS", "5")
        code, out, _ = run_cli(
            capsys, ["eval", "--alpha", "0.5", "--z", "3", "--max-terms", "10000"]
        )
        _, rows = parse_csv(out)
        assert rows[0]["converged"] == "true"

    def test_bad_env_value_is_an_error(self, capsys, monkeypatch):
        monkeypatch.setenv("ML_MAX_TERMS", "lots")
        code, _, err = run_cli(capsys, ["eval", "--alpha", "0.5", "--z", "1"])
        assert code == 1
        assert "ML_MAX_TERMS" in err


class TestClassify:
    def test_holds(self, capsys):
        code, out, _ = run_cli(capsys, ["classify", "--alpha", "0.7", "--lambda", "0"])
        assert code == 0
        _, rows = parse_csv(out)
        assert rows[0]["verdict"] == "HOLDS"

    def test_fails(self, capsys):
        code, out, _ = run_cli(capsys, ["classify", "--alpha", "0.7", "--lambda", "1"])
        assert code == 0
        _, rows = parse_csv(out)
        assert rows[0]["verdict"] == "FAILS"

    def test_inconclusive_is_exit_1(self, capsys):
        code, _, err = run_cli(
            capsys,
            ["classify", "--alpha", "0.5", "--lambda", "1", "--threshold", "1e12"],
        )
        assert code == 1
        assert "between" in err


class TestGrid:
    ARGS = ["grid", "--alpha", "0.5", "--lambda", "-1", "--tmax", "2", "--n", "9"]

    def test_defect_signal(self, capsys):
        code, out, _ = run_cli(capsys, self.ARGS)
        assert code == 0
        _, rows = parse_csv(out)
        assert len(rows) == 81
        assert max(abs(float(r["defect"])) for r in rows) >= 0.15

    def test_deterministic_output(self, capsys):
        _, out1, _ = run_cli(capsys, self.ARGS)
        _, out2, _ = run_cli(capsys, self.ARGS)
        assert out1 == out2

    def test_csv_json_round_trip(self, capsys):
        _, csv_out, _ = run_cli(capsys, self.ARGS)
        _, json_out, _ = run_cli(capsys, self.ARGS + ["--output-format", "json"])
        _, csv_rows = parse_csv(csv_out)
        doc = json.loads(json_out)
        assert doc["command"] == "grid"
        assert len(doc["rows"]) == len(csv_rows)
        for jrow, crow in zip(doc["rows"], csv_rows):
            for key in ("t", "s", "defect"):
                assert jrow[key] == float(crow[key])  # exact: shortest repr round-trips
        assert doc["sup_abs"] >= 0.15

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "grid.csv"
        code, out, _ = run_cli(capsys, self.ARGS + ["--output", str(target)])
        assert code == 0
        assert out == ""
        header, rows = parse_csv(target.read_text())
        assert header == ["t", "s", "defect"]
        assert len(rows) == 81


class TestDefectCommand:
    def test_single_cell(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["defect", "--alpha", "0.5", "--lambda", "-1", "--t", "1", "--s", "1"],
        )
        assert code == 0
        _, rows = parse_csv(out)
        assert float(rows[0]["defect"]) == pytest.approx(0.1533762878, abs=1e-8)


class TestMatrixCommand:
    def make_matrix(self, tmp_path, a):
        path = tmp_path / "m.csv"
        path.write_text("\n".join(",".join(repr(x) for x in row) for row in a) + "\n")
        return str(path)

    def test_single_point(self, tmp_path, capsys):
        path = self.make_matrix(tmp_path, [[-1.0, 0.0], [0.0, 2.0]])
        code, out, _ = run_cli(
            capsys,
            ["matrix", "--alpha", "0.5", "--matrix", path, "--t", "1", "--s", "1"],
        )
        assert code == 0
        _, rows = parse_csv(out)
        assert abs(float(rows[0]["defect"])) >= 0.1

    def test_grid_sweep_json(self, tmp_path, capsys):
        path = self.make_matrix(tmp_path, [[0.0, 1.0], [1.0, 0.0]])
        code, out, _ = run_cli(
            capsys,
            ["matrix", "--alpha", "1", "--matrix", path, "--n", "4",
             "--output-format", "json"],
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 2
        assert doc["sup_abs"] <= 1e-9

    def test_non_symmetric_rejected(self, tmp_path, capsys):
        path = self.make_matrix(tmp_path, [[0.0, 1.0], [0.0, 0.0]])
        code, _, err = run_cli(capsys, ["matrix", "--alpha", "0.5", "--matrix", path])
        assert code == 1
        assert "symmetric" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(
            capsys, ["matrix", "--alpha", "0.5", "--matrix", "/nonexistent.csv"]
        )
        assert code == 1
        assert "--matrix" in err


class TestCaputoAndFit:
    def test_caputo_row(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["caputo-check", "--alpha", "0.5", "--lambda", "-1", "--steps", "64"],
        )
        assert code == 0
        _, rows = parse_csv(out)
        assert float(rows[0]["max_residual"]) == pytest.approx(6.04008e-4, rel=1e-3)
        assert float(rows[0]["empirical_order"]) == pytest.approx(1.5, abs=0.3)

    def test_caputo_zero_rate_order_empty(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["caputo-check", "--alpha", "0.5", "--lambda", "0", "--steps", "16"],
        )
        assert code == 0
        _, rows = parse_csv(out)
        assert rows[0]["max_residual"] == "0.0"
        assert rows[0]["empirical_order"] == ""

    def test_fit_row(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["fit", "--alpha", "1", "--lambda", "-3", "--tmax", "5"],
        )
        assert code == 0
        _, rows = parse_csv(out)
        assert float(rows[0]["omega"]) == pytest.approx(-3.0, abs=1e-12)
        assert float(rows[0]["residual"]) <= 1e-11


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "mlsemigroup", "eval", "--alpha", "1", "--z", "2"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    value = float(out.stdout.strip().splitlines()[1].split(",")[3])
    assert value == pytest.approx(math.exp(2.0), rel=1e-10)
