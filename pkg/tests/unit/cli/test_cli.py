"""Tests for main CLI interface."""

from click.testing import CliRunner

from prodlab import __version__
from prodlab.cli import main


class TestMainCLI:
    def setup_method(self):
        self.runner = CliRunner()

    def test_help_output(self):
        result = self.runner.invoke(main, ["--help"])

        assert result.exit_code == 0
        assert "ProdLab - simulation lab" in result.output
        for command in ("run", "clt", "fclt", "lil", "extremal", "check", "init"):
            assert command in result.output

    def test_version(self):
        result = self.runner.invoke(main, ["--version"])

        assert result.exit_code == 0
        assert __version__ in result.output

    def test_seed_must_fit_in_64_bits(self):
        result = self.runner.invoke(main, ["--seed", str(2**64), "check"])

        assert result.exit_code == 2

    def test_workers_must_be_positive(self):
        result = self.runner.invoke(main, ["--workers", "0", "check"])

        assert result.exit_code == 2

    def test_global_flags_reach_the_config(self, tmp_path):
        out = tmp_path / "out"

        result = self.runner.invoke(
            main,
            [
                "--seed",
                "17",
                "--out",
                str(out),
                "--workers",
                "2",
                "--no-retain-samples",
                "clt",
                "-n",
                "20",
                "-R",
                "5",
            ],
        )

        assert result.exit_code == 0, result.output
        assert not (out / "samples.csv").exists()
        assert '"seed": 17' in (out / "metadata.json").read_text()
        assert '"workers": 2' in (out / "metadata.json").read_text()
