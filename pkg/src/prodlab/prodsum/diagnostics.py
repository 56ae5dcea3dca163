"""Numerical versions of the devices used to prove the functional limit."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from ..engine.streams import derive_stream
from ..exceptions import ParameterError
from ..variates.distributions import DistributionSpec, sample_iid
from ..variates.paths import SamplePath, partial_sums

PathSource = Callable[[DistributionSpec, int, object], SamplePath]


def theta_remainder(x):
    """theta(x) = (ln(1 + x) - x)/x, so that ln(1 + x) = x + x theta(x).

    Extended continuously by theta(0) = 0. Accepts scalars or arrays.

    Raises:
        ParameterError: If any x <= -1
    """
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr <= -1.0):
        raise ParameterError("theta is defined for x > -1 only")
    safe = np.where(arr == 0.0, 1.0, arr)
    out = np.where(arr == 0.0, 0.0, (np.log1p(safe) - safe) / safe)
    return float(out) if out.ndim == 0 else out


def iid_path(spec: DistributionSpec, n: int, stream) -> SamplePath:
    """Partial sums of n i.i.d. draws from ``spec``."""
    return partial_sums(sample_iid(spec, n, stream))


@dataclass
class ConditionEstimate:
    """Monte Carlo estimate of E|S_n - n mu| / sqrt(n) with its standard error."""

    value: float
    stderr: float
    sigma: float
    replications: int

    def within_bound(self, n_stderr: float = 3.0) -> bool:
        """Check the Cauchy-Schwarz bound value <= sigma (+ n_stderr errors)."""
        return self.value <= self.sigma + n_stderr * self.stderr


def l1_condition_estimate(
    spec: DistributionSpec,
    n: int,
    replications: int,
    master_seed: int,
    path_source: PathSource | None = None,
) -> ConditionEstimate:
    """Estimate E|S_n - n mu|/sqrt(n), which Cauchy-Schwarz bounds by sigma.

    Args:
        spec: Law of the increments
        n: Path length
        replications: Number of independent paths
        master_seed: Seed for per-replication streams
        path_source: Path generator (defaults to i.i.d. partial sums)
    """
    if n < 1:
        raise ParameterError(f"n ≥ 1 required, got n={n}")
    if replications < 1:
        raise ParameterError(f"R ≥ 1 required, got R={replications}")
    source = path_source or iid_path
    root_n = math.sqrt(n)
    draws = np.empty(replications)
    for r in range(replications):
        path = source(spec, n, derive_stream(master_seed, r))
        draws[r] = abs(path.values[-1] - n * spec.mu) / root_n
    stderr = 0.0
    if replications > 1:
        stderr = float(draws.std(ddof=1) / math.sqrt(replications))
    return ConditionEstimate(
        value=float(draws.mean()),
        stderr=stderr,
        sigma=spec.sigma,
        replications=replications,
    )


def max_relative_deviation(path: SamplePath, spec: DistributionSpec, k0: int) -> float:
    """max over k >= k0 of |S_k/(k mu) - 1|; tends to zero as k0 grows."""
    if not 1 <= k0 <= path.n:
        raise ParameterError(f"k0 must lie in [1, {path.n}], got {k0}")
    k = np.arange(k0, path.n + 1, dtype=np.float64)
    return float(np.max(np.abs(path.values[k0 - 1 :] / (k * spec.mu) - 1.0)))
