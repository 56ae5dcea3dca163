"""The product-of-sums statistic in log space and its path versions.

All sums over k use compensated summation so that the value at t = 1 of
every path equals the corresponding scalar statistic bit for bit.
"""

from __future__ import annotations

import math

import numpy as np

from ..exceptions import ParameterError
from ..variates.distributions import DistributionSpec
from ..variates.paths import SamplePath
from ..wiener.grid import GridFunction, Interpretation
from .summation import compensated_cumsum, compensated_sum


def log_ratios(path: SamplePath, spec: DistributionSpec) -> np.ndarray:
    """ln(S_k / (k mu)) for k = 1..n."""
    k = np.arange(1, path.n + 1, dtype=np.float64)
    return np.log(path.values / (k * spec.mu))


def grid_indices(n: int, m: int) -> np.ndarray:
    """[n t_i] for t_i = i/m, computed in exact integer arithmetic."""
    if m < 1:
        raise ParameterError(f"m ≥ 1 required, got m={m}")
    return (n * np.arange(m + 1, dtype=np.int64)) // m


def _prefix_on_grid(terms: np.ndarray, m: int) -> np.ndarray:
    prefix = np.concatenate([[0.0], compensated_cumsum(terms)])
    return prefix[grid_indices(terms.size, m)]


def log_prod_statistic(path: SamplePath, spec: DistributionSpec) -> float:
    """(gamma/sqrt(n)) * sum_k ln(S_k/(k mu)), the log of the statistic."""
    scale = spec.gamma / math.sqrt(path.n)
    return scale * compensated_sum(log_ratios(path, spec))


def log_prod_path(path: SamplePath, spec: DistributionSpec, m: int) -> GridFunction:
    """Value at t_i = i/m: (gamma/sqrt(n)) * sum_{k <= [n t_i]} ln(S_k/(k mu))."""
    scale = spec.gamma / math.sqrt(path.n)
    values = scale * _prefix_on_grid(log_ratios(path, spec), m)
    return GridFunction(values, Interpretation.CADLAG_STEP)


def partial_sum_process(
    path: SamplePath, spec: DistributionSpec, m: int
) -> GridFunction:
    """W_n(t) = (S_[nt] - [nt] mu) / (sigma sqrt(n)) with S_0 = 0."""
    k = grid_indices(path.n, m)
    s = np.concatenate([[0.0], path.values])[k]
    values = (s - k * spec.mu) / (spec.sigma * math.sqrt(path.n))
    return GridFunction(values, Interpretation.CADLAG_STEP)


def _linear_terms(path: SamplePath, spec: DistributionSpec) -> np.ndarray:
    k = np.arange(1, path.n + 1, dtype=np.float64)
    return (path.values - k * spec.mu) / k


def linearized_process(
    path: SamplePath, spec: DistributionSpec, m: int
) -> GridFunction:
    """Y_n(t) = (1/(sigma sqrt(n))) * sum_{k <= [nt]} (S_k - k mu)/k.

    This is the first-order part of log_prod_path in ln(1 + x) = x + x theta(x).
    """
    prefix = _prefix_on_grid(_linear_terms(path, spec), m)
    return GridFunction(
        prefix / (spec.sigma * math.sqrt(path.n)), Interpretation.CADLAG_STEP
    )


def truncated_linearized_process(
    path: SamplePath, spec: DistributionSpec, m: int, eps: float
) -> GridFunction:
    """Y_{n,eps}(t): the Y_n sum restricted to k > [n eps]; zero for t <= eps."""
    if not 0.0 < eps < 1.0:
        raise ParameterError(f"eps must lie in (0, 1), got {eps}")
    terms = _linear_terms(path, spec)
    prefix = np.concatenate([[0.0], compensated_cumsum(terms)])
    cut = prefix[int(math.floor(path.n * eps))]
    t = np.arange(m + 1, dtype=np.float64) / m
    values = np.where(t > eps, prefix[grid_indices(path.n, m)] - cut, 0.0)
    return GridFunction(
        values / (spec.sigma * math.sqrt(path.n)), Interpretation.CADLAG_STEP
    )


def remainder_sup(path: SamplePath, spec: DistributionSpec, m: int) -> float:
    """sup over the grid of |log_prod_path - linearized_process|.

    Measures the theta-remainder term, which vanishes in probability.
    """
    full = log_prod_path(path, spec, m).values
    linear = linearized_process(path, spec, m).values
    return float(np.max(np.abs(full - linear)))


def time_indices(n: int, times) -> np.ndarray:
    """[n t] for each t in [0, 1], robust to decimal representation error."""
    out = []
    for t in times:
        if not 0.0 <= t <= 1.0:
            raise ParameterError(f"evaluation times must lie in [0, 1], got {t}")
        out.append(min(n, int(math.floor(n * t * (1.0 + 1e-12)))))
    return np.asarray(out, dtype=np.int64)


def log_prod_values(path: SamplePath, spec: DistributionSpec, times) -> np.ndarray:
    """The log-product path evaluated at the exact indices [n t], t in ``times``.

    At t = 1 this is bit-identical to log_prod_statistic.
    """
    scale = spec.gamma / math.sqrt(path.n)
    prefix = np.concatenate([[0.0], compensated_cumsum(log_ratios(path, spec))])
    return scale * prefix[time_indices(path.n, times)]
