"""Tests for CLI utility functions."""

import io

import numpy as np
import pytest
from rich.console import Console

from prodlab.core.output import Output
from prodlab.engine.stats import summarize
from prodlab.exceptions import (
    CheckFailedError,
    ConfigError,
    ExperimentError,
    ParameterError,
    ProdLabError,
    ReplicationError,
    ResultWriteError,
    SingularSystemError,
)
from prodlab.models import ExperimentConfig, ExperimentKind, ExperimentResult
from prodlab.utils import (
    create_metrics_table,
    create_rows_table,
    create_summary_table,
    handle_error,
    show_result,
)


def _output():
    buffer = io.StringIO()
    return Output(Console(file=buffer, width=200)), buffer


def _result(kind=ExperimentKind.CLT, **config):
    return ExperimentResult(config=ExperimentConfig(kind=kind, **config))


class TestHandleError:
    @pytest.mark.parametrize(
        "error, label",
        [
            (ConfigError("bad key"), "Config Error: bad key"),
            (ReplicationError("replication 3 failed", 3), "Replication Error:"),
            (SingularSystemError("singular"), "Solver Error: singular"),
            (ExperimentError("lil experiment failed"), "Experiment Error:"),
            (ResultWriteError("read-only"), "Output Error: read-only"),
            (CheckFailedError("1 check(s) failed"), "Check Failed:"),
            (ParameterError("t out of range"), "Parameter Error:"),
            (ProdLabError("boom"), "Error: boom"),
        ],
    )
    def test_labels(self, error, label):
        output, buffer = _output()

        handle_error(error, output)

        assert label in buffer.getvalue()

    def test_hints(self):
        output, buffer = _output()

        handle_error(ResultWriteError("read-only"), output)
        handle_error(ReplicationError("replication 3 failed", 3), output)

        assert "--out" in buffer.getvalue()
        assert "R=1" in buffer.getvalue()

    def test_default_output(self, mocker):
        mock_output = mocker.patch("prodlab.utils.Output")

        handle_error(ConfigError("bad"))

        mock_output.return_value.error.assert_called_once_with("Config Error: bad")


class TestTables:
    def test_summary_table_for_scalar_sample(self):
        result = _result()
        result.summaries = [summarize([0.1, -0.2, 0.3])]
        result.ks_distances = [0.25]

        table = create_summary_table(result)

        assert table.row_count == 1
        assert table.columns[0]._cells == ["log statistic"]
        assert table.columns[5]._cells == ["0.2500"]

    def test_summary_table_for_fclt(self):
        result = _result(ExperimentKind.FCLT, t_grid=[0.5, 1.0])
        result.summaries = [summarize([1.0]), summarize([1.0, 2.0])]
        result.ks_distances = [0.1, 0.2]

        table = create_summary_table(result)

        assert table.columns[0]._cells == ["t=0.5", "t=1"]
        assert "\u2014" in table.columns[3]._cells[0]

    def test_rows_table_formats_cells(self):
        table = create_rows_table(
            ["name", "value", "passed"], [("a", 0.5, True), ("b", 2, False)]
        )

        assert table.columns[1]._cells == ["0.5", "2"]
        assert "yes" in table.columns[2]._cells[0]
        assert "NO" in table.columns[2]._cells[1]

    def test_metrics_table(self):
        result = _result()
        result.metrics = {"ks_distance": 0.125, "failed": [], "checks": 3}

        table = create_metrics_table(result)

        assert table.columns[0]._cells == ["ks_distance", "failed", "checks"]
        assert table.columns[1]._cells[0] == "0.125"
        assert "none" in table.columns[1]._cells[1]


class TestShowResult:
    def test_check_result(self):
        output, buffer = _output()
        result = _result(ExperimentKind.CHECK, seed=8)
        result.tables["check"] = (
            ["name", "value", "target", "tolerance", "passed"],
            [("compensated_sum", 1.0, 1.0, 0.0, True)],
        )
        result.metrics = {"checks": 1, "failed": []}

        show_result(result, output)

        text = buffer.getvalue()
        assert "compensated_sum" in text
        assert "seed 8" in text

    def test_lil_trajectory_only_when_verbose(self):
        result = _result(ExperimentKind.LIL)
        result.tables["trajectory"] = (
            ["n", "value", "running_max"],
            [(1000, 0.5, 0.75)],
        )
        result.metrics = {"final_value": 0.5}

        quiet, quiet_buffer = _output()
        loud, loud_buffer = _output()
        show_result(result, quiet)
        show_result(result, loud, verbose=True)

        assert "running_max" not in quiet_buffer.getvalue()
        assert "running_max" in loud_buffer.getvalue()

    def test_extremal_result(self):
        output, buffer = _output()
        result = _result(ExperimentKind.EXTREMAL)
        result.tables["extremal"] = (
            ["t", "m", "value", "closed_form", "gap"],
            [(1.0, 16384, 1.4140, float(np.sqrt(2.0)), 2e-4)],
        )

        show_result(result, output)

        assert "closed_form" in buffer.getvalue()
