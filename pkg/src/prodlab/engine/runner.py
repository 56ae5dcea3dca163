"""Deterministic Monte Carlo experiment runner.

Replications are independent: replication r draws only from
derive_stream(seed, r). They are executed in contiguous index chunks on
worker threads and merged back in index order, so the output never depends
on the number of workers or on completion order.
"""

from __future__ import annotations

import asyncio
import time
from collections.abc import Callable
from datetime import datetime, timezone
from typing import TypeVar

import numpy as np

from ..exceptions import ParameterError, ProdLabError, ReplicationError
from ..models import ExperimentConfig, ExperimentKind, ExperimentResult
from ..prodsum.coupling import coupled_path
from ..prodsum.diagnostics import iid_path
from ..prodsum.statistic import log_prod_statistic, log_prod_values, time_indices
from ..wiener.functionals import limit_covariance, limit_covariance_matrix
from ..wiener.simulate import simulate_wiener
from .logger import RunLogger
from .stats import empirical_covariance, ks_distance, normal_cdf, summarize
from .streams import STREAM_ALGORITHM, derive_stream

T = TypeVar("T")

# replications per chunk handed to a worker thread
CHUNK_SIZE = 256
CLT_LIMIT_VARIANCE = 2.0


def _chunks(count: int) -> list[range]:
    starts = range(0, count, CHUNK_SIZE)
    return [range(lo, min(lo + CHUNK_SIZE, count)) for lo in starts]


def _run_chunk(task: Callable[[int], T], indices: range) -> list[T]:
    out = []
    for r in indices:
        try:
            out.append(task(r))
        except (ProdLabError, ArithmeticError, ValueError) as e:
            raise ReplicationError(f"replication {r} failed: {e}", r) from e
    return out


async def _gather_chunks(
    task: Callable[[int], T], count: int, workers: int, logger: RunLogger | None
) -> list[T]:
    semaphore = asyncio.Semaphore(max(1, workers))

    async def run(indices: range) -> list[T]:
        async with semaphore:
            result = await asyncio.to_thread(_run_chunk, task, indices)
        if logger:
            logger.info(f"replications {indices.start}..{indices.stop - 1} done")
        return result

    parts = await asyncio.gather(*(run(c) for c in _chunks(count)))
    return [item for part in parts for item in part]


def run_replications(
    task: Callable[[int], T],
    count: int,
    workers: int = 1,
    logger: RunLogger | None = None,
) -> list[T]:
    """Run ``task(r)`` for r = 0..count-1 and return results in index order.

    Raises:
        ReplicationError: On the first failing replication; the run aborts
    """
    if count < 1:
        raise ParameterError(f"R ≥ 1 required, got R={count}")
    try:
        return asyncio.run(_gather_chunks(task, count, workers, logger))
    except ReplicationError as e:
        if logger:
            logger.error(str(e), scope=f"replication {e.replication_index}")
        raise


def _marginal_ks(column: np.ndarray, variance: float) -> float:
    if variance > 0:
        return ks_distance(column, normal_cdf(variance))
    # point mass at 0
    return float(max(np.mean(column < 0.0), np.mean(column > 0.0)))


def _require_kind(config: ExperimentConfig, *kinds: ExperimentKind) -> None:
    if config.kind not in kinds:
        names = "/".join(k.value for k in kinds)
        raise ParameterError(f"expected a {names} config, got {config.kind.value}")


def start_result(config: ExperimentConfig) -> tuple[ExperimentResult, float]:
    """Create an empty result stamped with seed provenance and start time."""
    result = ExperimentResult(config=config)
    result.started_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
    result.provenance = {
        "master_seed": config.seed,
        "seed_generated": config.seed_generated,
        "stream": STREAM_ALGORITHM,
        "replication_indices": [0, config.replications - 1],
    }
    return result, time.perf_counter()


def _finish_scalar(
    result: ExperimentResult, samples: np.ndarray, started: float
) -> ExperimentResult:
    result.summaries = [summarize(samples)]
    result.ks_distances = [ks_distance(samples, normal_cdf(CLT_LIMIT_VARIANCE))]
    if result.config.retain_samples:
        result.samples = samples
        rows = [(r, float(v)) for r, v in enumerate(samples)]
        result.tables["samples"] = (["replication", "value"], rows)
    result.metrics["ks_distance"] = result.ks_distances[0]
    result.metrics["variance"] = result.summaries[0].variance
    result.wall_seconds = time.perf_counter() - started
    return result


def run_clt(
    config: ExperimentConfig, logger: RunLogger | None = None
) -> ExperimentResult:
    """R replications of log_prod_statistic, compared with Normal(0, 2)."""
    _require_kind(config, ExperimentKind.CLT)
    spec, n = config.spec, config.n
    result, started = start_result(config)
    if logger:
        logger.info(f"{spec.describe()} n={n} R={config.replications}", "clt")

    def task(r: int) -> float:
        path = iid_path(spec, n, derive_stream(config.seed, r))
        return log_prod_statistic(path, spec)

    values = run_replications(task, config.replications, config.workers, logger)
    return _finish_scalar(result, np.asarray(values), started)


def run_coupled_clt(
    config: ExperimentConfig, logger: RunLogger | None = None
) -> ExperimentResult:
    """run_clt with S_k = k mu + sigma W(k) generated from a Wiener path."""
    _require_kind(config, ExperimentKind.CLT)
    spec, n = config.spec, config.n
    result, started = start_result(config)

    def task(r: int) -> tuple[float, int]:
        w = simulate_wiener(n, float(n), derive_stream(config.seed, r))
        coupled = coupled_path(spec, w, n)
        if coupled.excessive_clipping and logger:
            logger.warning(
                f"clipped {coupled.clipped}/{n} entries at k*mu/2", f"replication {r}"
            )
        return log_prod_statistic(coupled.path, spec), coupled.clipped

    pairs = run_replications(task, config.replications, config.workers, logger)
    result.metrics["clipped_entries"] = int(sum(c for _, c in pairs))
    result.provenance["path_generator"] = "coupled"
    return _finish_scalar(result, np.asarray([v for v, _ in pairs]), started)


def run_fclt(
    config: ExperimentConfig, logger: RunLogger | None = None
) -> ExperimentResult:
    """The log-product path at every t in t_grid against the limit process.

    Marginals are compared with Normal(0, limit_covariance(t, t)) and the
    empirical covariance across t_grid with limit_covariance(s, t).
    """
    _require_kind(config, ExperimentKind.FCLT)
    if not config.t_grid:
        raise ParameterError("fclt needs a non-empty t_grid")
    spec, n, times = config.spec, config.n, list(config.t_grid)
    time_indices(n, times)
    result, started = start_result(config)
    if logger:
        logger.info(
            f"{spec.describe()} n={n} R={config.replications} t={times}", "fclt"
        )

    def task(r: int) -> np.ndarray:
        path = iid_path(spec, n, derive_stream(config.seed, r))
        return log_prod_values(path, spec, times)

    rows = run_replications(task, config.replications, config.workers, logger)
    samples = np.vstack(rows)

    for j, t in enumerate(times):
        column = samples[:, j]
        result.summaries.append(summarize(column))
        result.ks_distances.append(_marginal_ks(column, limit_covariance(t, t)))

    limit = limit_covariance_matrix(times)
    result.limit_covariance = limit
    if config.replications > 1:
        empirical = empirical_covariance(samples)
        result.empirical_covariance = empirical
        cov_rows = [
            (s, t, float(empirical[a, b]), float(limit[a, b]))
            for a, s in enumerate(times)
            for b, t in enumerate(times)
        ]
        result.tables["covariance"] = (["s", "t", "empirical", "limit"], cov_rows)

    if config.retain_samples:
        result.samples = samples
        sample_rows = [
            (r, t, float(samples[r, j]))
            for r in range(samples.shape[0])
            for j, t in enumerate(times)
        ]
        result.tables["samples"] = (["replication", "t", "value"], sample_rows)

    result.metrics["ks_distance_max"] = max(result.ks_distances)
    result.wall_seconds = time.perf_counter() - started
    return result
