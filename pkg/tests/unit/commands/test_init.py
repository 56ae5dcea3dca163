"""Tests for init command."""

import toml
from click.testing import CliRunner

from prodlab.cli import main
from prodlab.core.config import load_config


class TestInitCommand:
    def setup_method(self):
        self.runner = CliRunner()

    def test_init_writes_loadable_config(self, tmp_path):
        path = tmp_path / "fclt.toml"

        result = self.runner.invoke(
            main, ["--seed", "42", "init", str(path), "--kind", "fclt"]
        )

        assert result.exit_code == 0, result.output
        data = toml.load(path)
        assert data["kind"] == "fclt"
        assert data["seed"] == 42
        assert data["t_grid"] == [0.25, 0.5, 1.0]
        assert load_config(path).seed == 42

    def test_init_generates_seed(self, tmp_path):
        path = tmp_path / "clt.json"

        result = self.runner.invoke(main, ["init", str(path)])

        assert result.exit_code == 0, result.output
        assert '"seed"' in path.read_text()

    def test_init_keeps_existing_file(self, tmp_path):
        path = tmp_path / "clt.toml"
        path.write_text("# mine\n")

        result = self.runner.invoke(main, ["init", str(path)])

        assert result.exit_code == 0
        assert "already exists" in result.output
        assert path.read_text() == "# mine\n"

    def test_init_force_overwrites(self, tmp_path):
        path = tmp_path / "clt.toml"
        path.write_text("# mine\n")

        result = self.runner.invoke(main, ["init", str(path), "--force"])

        assert result.exit_code == 0, result.output
        assert toml.load(path)["kind"] == "clt"
