"""Tests for lil command."""

import json

from click.testing import CliRunner

from prodlab.cli import main


class TestLilCommand:
    def setup_method(self):
        self.runner = CliRunner()

    def test_lil_success(self, tmp_path):
        result = self.runner.invoke(
            main,
            ["--seed", "7", "--out", str(tmp_path), "lil"]
            + ["-n", "3000", "--n0", "100", "--rho", "1.5", "-m", "16"],
        )

        assert result.exit_code == 0, result.output
        assert "running_max" in result.output
        trajectory = (tmp_path / "trajectory.csv").read_text().splitlines()
        assert trajectory[0] == "n,value,running_max"
        assert trajectory[1].startswith("100,")
        assert trajectory[-1].startswith("3000,")
        scaled = (tmp_path / "scaled_path.csv").read_text().splitlines()
        assert len(scaled) == 18

    def test_lil_verbose_prints_trajectory(self, tmp_path):
        result = self.runner.invoke(
            main,
            ["-v", "--seed", "7", "--out", str(tmp_path), "lil"]
            + ["-n", "500", "--n0", "100"],
        )

        assert result.exit_code == 0, result.output
        assert "running_max" in result.output

    def test_lil_n_below_n0(self, tmp_path):
        result = self.runner.invoke(
            main, ["--out", str(tmp_path), "lil", "-n", "50", "--n0", "100"]
        )

        assert result.exit_code == 2
        assert "at least 'n0'" in result.output

    def test_lil_rho_must_exceed_one(self, tmp_path):
        result = self.runner.invoke(
            main, ["--out", str(tmp_path), "lil", "--rho", "1"]
        )

        assert result.exit_code == 2
        assert "'rho'" in result.output

    def test_lil_ridge_reaches_the_score(self, tmp_path):
        result = self.runner.invoke(
            main,
            ["--seed", "7", "--out", str(tmp_path), "lil"]
            + ["-n", "500", "--n0", "100", "--ridge", "0.5"],
        )

        assert result.exit_code == 0, result.output
        meta = json.loads((tmp_path / "metadata.json").read_text())
        assert meta["config"]["ridge"] == 0.5
        assert meta["metrics"]["score_ridge"] == 0.5

    def test_lil_foreign_error_exits_3(self, tmp_path, mocker):
        mocker.patch(
            "prodlab.core.service.run_lil",
            side_effect=RuntimeError("event loop is already running"),
        )

        result = self.runner.invoke(
            main,
            ["--seed", "7", "--out", str(tmp_path), "lil"]
            + ["-n", "500", "--n0", "100"],
        )

        assert result.exit_code == 3
        assert "Experiment Error" in result.output
        assert "Traceback" not in result.output
