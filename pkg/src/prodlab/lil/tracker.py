"""Law-of-iterated-logarithm tracking along one long path.

The normalization replaces sqrt(n) in the log-product statistic by
sqrt(2 n ln ln n). A single path is extended block by block between
geometrically spaced checkpoints; partial sums and the log sum are carried
over between blocks instead of being recomputed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from ..engine.logger import RunLogger
from ..engine.runner import start_result
from ..engine.streams import derive_stream
from ..exceptions import ParameterError, PositivityError
from ..extremal.limitset import limit_set_distance
from ..extremal.optimizer import envelope
from ..models import ExperimentConfig, ExperimentKind, ExperimentResult
from ..prodsum.statistic import grid_indices, log_ratios
from ..prodsum.summation import (
    CompensatedSum,
    compensated_cumsum,
    compensated_sum,
)
from ..variates.distributions import DistributionSpec, sample_iid
from ..variates.paths import SamplePath
from ..wiener.grid import GridFunction, Interpretation

# cells of the scaled path scored against the limit set
SCORE_CELLS = 8
# Tikhonov weight of the score when the config sets no ridge
SCORE_RIDGE = 1e-2
# incremental and from-scratch values must agree to this relative accuracy
RECOMPUTE_TOLERANCE = 1e-12


def lil_scale(spec: DistributionSpec, n: int) -> float:
    """gamma / sqrt(2 n ln ln n)."""
    if n < 3:
        raise ParameterError(
            f"n ≥ 3 required (ln ln n must be positive), got n={n}"
        )
    return spec.gamma / math.sqrt(2.0 * n * math.log(math.log(n)))


def lil_normalized(path: SamplePath, spec: DistributionSpec) -> float:
    """(gamma/sqrt(2 n ln ln n)) * sum_{k <= n} ln(S_k/(k mu))."""
    scale = lil_scale(spec, path.n)
    return scale * compensated_sum(log_ratios(path, spec))


def strassen_scaled_path(
    path: SamplePath, spec: DistributionSpec, m: int
) -> GridFunction:
    """x -> (gamma/sqrt(2 n ln ln n)) * sum_{k <= [n x]} ln(S_k/(k mu)) on i/m.

    The value at x = 1 equals lil_normalized(path, spec).
    """
    scale = lil_scale(spec, path.n)
    prefix = np.concatenate([[0.0], compensated_cumsum(log_ratios(path, spec))])
    values = scale * prefix[grid_indices(path.n, m)]
    return GridFunction(values, Interpretation.CADLAG_STEP)


def envelope_slack(scaled: GridFunction) -> float:
    """max over the grid of |g(x)| - sqrt(2x); at most 0 asymptotically."""
    return float(np.max(np.abs(scaled.values) - envelope(scaled.times)))


def lil_checkpoints(n0: int, rho: float, n_max: int) -> list[int]:
    """ceil(n0 rho^j) for j = 0, 1, ... up to n_max, ending exactly at n_max."""
    if n0 < 3:
        raise ParameterError(f"n0 ≥ 3 required, got n0={n0}")
    if not rho > 1.0:
        raise ParameterError(f"rho > 1 required, got rho={rho}")
    if n_max < n0:
        raise ParameterError(f"n ({n_max}) must be at least n0 ({n0})")
    points: list[int] = []
    j = 0
    while True:
        # round away representation error before the ceiling
        n_j = math.ceil(round(n0 * rho**j, 9))
        if n_j > n_max:
            break
        if not points or n_j > points[-1]:
            points.append(n_j)
        j += 1
    if points[-1] != n_max:
        points.append(n_max)
    return points


@dataclass(frozen=True)
class LilPoint:
    """One checkpoint of the trajectory.

    running_max is the largest value so far (the one-sided limsup side);
    running_abs_max is the largest |value| so far.
    """

    n: int
    value: float
    running_max: float
    running_abs_max: float


class LilTracker:
    """Streaming state of the LIL statistic along a single path.

    Holds S_n and a compensated running sum of ln(S_k/(k mu)), so extending
    the path costs only the new block.
    """

    def __init__(self, spec: DistributionSpec, keep_path: bool = False):
        self.spec = spec
        self.n = 0
        self.last_sum = 0.0
        self.running_max = -math.inf
        self.running_abs_max = 0.0
        self.points: list[LilPoint] = []
        self._log_sum = CompensatedSum()
        self._blocks: list[np.ndarray] | None = [] if keep_path else None

    def extend_sums(self, sums) -> None:
        """Append the next partial sums S_{n+1}, ..., S_{n+b}."""
        s = np.asarray(sums, dtype=np.float64)
        if s.size == 0:
            return
        bad = np.flatnonzero(~(s > 0))
        if bad.size:
            idx = self.n + int(bad[0]) + 1
            raise PositivityError(f"S_{idx} is not positive", index=idx)
        k = np.arange(self.n + 1, self.n + s.size + 1, dtype=np.float64)
        self._log_sum.add_block(np.log(s / (k * self.spec.mu)))
        self.n += int(s.size)
        self.last_sum = float(s[-1])
        if self._blocks is not None:
            self._blocks.append(s)

    def extend_increments(self, x) -> None:
        """Append summands x_{n+1}, ..., x_{n+b} (each must be positive)."""
        arr = np.asarray(x, dtype=np.float64)
        bad = np.flatnonzero(~(arr > 0))
        if bad.size:
            idx = self.n + int(bad[0]) + 1
            raise PositivityError(f"entry {idx} is not positive", index=idx)
        self.extend_sums(compensated_cumsum(arr, initial=self.last_sum))

    @property
    def value(self) -> float:
        return lil_scale(self.spec, self.n) * self._log_sum.value

    def checkpoint(self) -> LilPoint:
        """Record the statistic at the current n and update the running maxima."""
        value = self.value
        self.running_max = max(self.running_max, value)
        self.running_abs_max = max(self.running_abs_max, abs(value))
        point = LilPoint(self.n, value, self.running_max, self.running_abs_max)
        self.points.append(point)
        return point

    def path(self) -> SamplePath:
        if not self._blocks:
            raise ParameterError("tracker holds no path (keep_path=False or empty)")
        return SamplePath(np.concatenate(self._blocks))


def track_path(
    path: SamplePath, spec: DistributionSpec, checkpoints: list[int]
) -> list[LilPoint]:
    """Trajectory of an existing path at the given checkpoints."""
    tracker = LilTracker(spec)
    for n_j in checkpoints:
        if not tracker.n < n_j <= path.n:
            raise ParameterError(
                "checkpoints must increase and stay within the path"
            )
        tracker.extend_sums(path.values[tracker.n : n_j])
        tracker.checkpoint()
    return tracker.points


def lil_trajectory(
    spec: DistributionSpec,
    checkpoints: list[int],
    stream,
    keep_path: bool = False,
) -> LilTracker:
    """Grow one i.i.d. path from ``stream`` through every checkpoint."""
    tracker = LilTracker(spec, keep_path=keep_path)
    for n_j in checkpoints:
        tracker.extend_increments(sample_iid(spec, n_j - tracker.n, stream))
        tracker.checkpoint()
    return tracker


def run_lil(
    config: ExperimentConfig, logger: RunLogger | None = None
) -> ExperimentResult:
    """Single-path LIL trajectory, scaled path and envelope diagnostics."""
    if config.kind is not ExperimentKind.LIL:
        raise ParameterError(f"expected a lil config, got {config.kind.value}")
    spec = config.spec
    checkpoints = lil_checkpoints(config.n0, config.rho, config.n)
    result, started = start_result(config)
    result.provenance["replication_indices"] = [0, 0]
    if logger:
        logger.info(
            f"{spec.describe()} n0={config.n0} rho={config.rho} "
            f"n={config.n} ({len(checkpoints)} checkpoints)",
            "lil",
        )

    tracker = lil_trajectory(
        spec, checkpoints, derive_stream(config.seed, 0), keep_path=True
    )
    path = tracker.path()

    final = tracker.points[-1]
    direct = lil_normalized(path, spec)
    gap = abs(final.value - direct)
    if gap > RECOMPUTE_TOLERANCE * max(abs(direct), 1.0) and logger:
        logger.warning(f"incremental value drifted from recomputation: {gap:.3g}")

    scaled = strassen_scaled_path(path, spec, config.m)
    ridge = SCORE_RIDGE if config.ridge is None else config.ridge
    score = limit_set_distance(
        strassen_scaled_path(path, spec, SCORE_CELLS), SCORE_CELLS, ridge
    )

    result.tables["trajectory"] = (
        ["n", "value", "running_max"],
        [(p.n, p.value, p.running_max) for p in tracker.points],
    )
    result.tables["scaled_path"] = (
        ["t", "value"],
        [(float(t), float(v)) for t, v in zip(scaled.times, scaled.values)],
    )
    result.metrics.update(
        {
            "final_value": final.value,
            "running_max": final.running_max,
            "running_abs_max": final.running_abs_max,
            "recompute_gap": gap,
            "envelope_slack": envelope_slack(scaled),
            "limit_set_score": score,
            "score_ridge": ridge,
            "checkpoints": len(checkpoints),
        }
    )
    result.wall_seconds = time.perf_counter() - started
    return result
