"""Service layer for ProdLab: runs one experiment end to end."""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

from rich.markup import escape

from ..engine.logger import RunLogger
from ..engine.results import write_result
from ..engine.runner import run_clt, run_coupled_clt, run_fclt
from ..exceptions import (
    CheckFailedError,
    ExperimentError,
    ProdLabError,
    ResultWriteError,
)
from ..extremal.optimizer import run_extremal
from ..lil.tracker import run_lil
from ..models import ExperimentConfig, ExperimentKind, ExperimentResult
from .output import Output
from .selfcheck import run_check

RUN_LOG = "run.log"


class ExperimentService:
    """Coordinates config, engine, persistence and the run log.

    Commands are thin Click wrappers that build a config and call run().
    Every run writes its CSV tables, metadata.json and run.log into
    ``config.out``.
    """

    def __init__(
        self,
        config: ExperimentConfig,
        output: Output,
        logger: RunLogger | None = None,
    ):
        self.config = config
        self.output = output
        self.logger = logger or RunLogger(Path(config.out) / RUN_LOG)
        self.written: list[Path] = []

    def _runner(self) -> Callable[[], ExperimentResult]:
        config, logger = self.config, self.logger
        kind = config.kind
        if kind is ExperimentKind.CLT:
            if config.generator == "coupled":
                return lambda: run_coupled_clt(config, logger)
            return lambda: run_clt(config, logger)
        if kind is ExperimentKind.FCLT:
            return lambda: run_fclt(config, logger)
        if kind is ExperimentKind.LIL:
            return lambda: run_lil(config, logger)
        if kind is ExperimentKind.EXTREMAL:
            return lambda: run_extremal(config)
        return lambda: run_check(config)

    def _execute(self, runner: Callable[[], ExperimentResult]) -> ExperimentResult:
        try:
            return runner()
        except ProdLabError:
            raise
        except Exception as e:
            kind = self.config.kind.value
            self.logger.error(f"{type(e).__name__}: {e}", kind)
            self.logger.flush()
            raise ExperimentError(
                f"{kind} experiment failed: {type(e).__name__}: {e}"
            ) from e

    def _prepare_out(self) -> None:
        out = Path(self.config.out)
        try:
            out.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ResultWriteError(
                f"Cannot create output directory '{out}': {e}"
            ) from e
        if not out.is_dir():
            raise ResultWriteError(f"Output path '{out}' is not a directory")

    def run(
        self, verbose: bool = False, show_progress: bool = True
    ) -> ExperimentResult:
        """Run the configured experiment and persist its outputs.

        Args:
            verbose: Echo extra progress details to the console
            show_progress: Display a spinner while the experiment runs

        Returns:
            The finished ExperimentResult

        Raises:
            ResultWriteError: If the output directory is not writable
            ExperimentError: If the experiment raises outside ProdLabError
        """
        config = self.config
        kind = config.kind.value
        self._prepare_out()

        if config.seed_generated:
            self.output.info(f"Generated master seed {config.seed}")
        self.output.verbose(f"Writing outputs to {config.out}", verbose)
        self.logger.info(
            f"start kind={kind} seed={config.seed} workers={config.workers}", kind
        )

        runner = self._runner()
        if show_progress:
            with self.output.progress_context() as progress:
                progress.update(f"Running {kind} experiment...")
                result = self._execute(runner)
                progress.finish()
        else:
            result = self._execute(runner)

        self.written = write_result(result, Path(config.out), self.logger)
        self.logger.info(f"done in {result.wall_seconds:.3f}s", kind)
        self.logger.flush()
        self.output.verbose(
            f"Wrote {', '.join(p.name for p in self.written)} and {RUN_LOG}", verbose
        )

        for warning in self.logger.warnings():
            self.output.warning(escape(warning))

        return result

    def raise_for_failed_checks(self, result: ExperimentResult) -> None:
        """Raise CheckFailedError if a check run has failing identities."""
        failed = result.metrics.get("failed", [])
        if result.kind is ExperimentKind.CHECK and failed:
            names = ", ".join(failed)
            self.logger.error(f"failed: {names}", "check")
            self.logger.flush()
            raise CheckFailedError(f"{len(failed)} check(s) failed: {names}")
