"""Tests for the console output channel."""

import io

from rich.console import Console
from rich.table import Table

from prodlab.core.output import Output


def _output():
    out, err = io.StringIO(), io.StringIO()
    return (
        Output(Console(file=out, width=120), Console(file=err, width=120)),
        out,
        err,
    )


class TestOutput:
    def test_messages_split_by_stream(self):
        output, out, err = _output()

        output.success("done")
        output.info("note")
        output.error("broken")
        output.warning("careful")

        assert "done" in out.getvalue() and "note" in out.getvalue()
        assert "broken" in err.getvalue() and "careful" in err.getvalue()
        assert "broken" not in out.getvalue()

    def test_single_console_receives_everything(self):
        buffer = io.StringIO()
        output = Output(Console(file=buffer))

        output.error("broken")

        assert "broken" in buffer.getvalue()

    def test_verbose_only_when_enabled(self):
        output, out, _ = _output()

        output.verbose("hidden", False)
        output.verbose("shown", True)

        assert "hidden" not in out.getvalue()
        assert "shown" in out.getvalue()

    def test_table_and_dim(self):
        output, out, _ = _output()
        table = Table()
        table.add_column("Metric")
        table.add_row("ks_distance")

        output.table(table)
        output.dim("seed 1")

        assert "ks_distance" in out.getvalue()
        assert "seed 1" in out.getvalue()

    def test_progress_context(self):
        output, _, _ = _output()

        with output.progress_context() as progress:
            progress.update("first")
            progress.update("second")
            progress.finish()
            progress.finish()
