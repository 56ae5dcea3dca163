"""Empirical summaries and Kolmogorov-Smirnov distances."""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
from scipy.special import ndtr

from ..exceptions import ParameterError
from ..models import QUANTILE_LEVELS, SampleSummary
from ..prodsum.summation import compensated_sum


def normal_cdf(
    variance: float, mean: float = 0.0
) -> Callable[[np.ndarray], np.ndarray]:
    """CDF of Normal(mean, variance)."""
    if not variance > 0:
        raise ParameterError(f"variance must be positive, got {variance}")
    scale = math.sqrt(variance)
    return lambda x: ndtr((np.asarray(x, dtype=np.float64) - mean) / scale)


def ks_distance(samples, target_cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """sup |F_R(x) - F(x)| between the empirical and the target CDF.

    Both one-sided parts are evaluated at the sample points: D+ uses the
    empirical CDF just after each point, D- just before.

    Raises:
        ParameterError: If the sample is empty
    """
    x = np.sort(np.asarray(samples, dtype=np.float64).ravel())
    r = x.size
    if r == 0:
        raise ParameterError("ks_distance needs a non-empty sample")
    cdf = np.clip(target_cdf(x), 0.0, 1.0)
    i = np.arange(1, r + 1, dtype=np.float64)
    d_plus = np.max(i / r - cdf)
    d_minus = np.max(cdf - (i - 1) / r)
    return float(min(1.0, max(d_plus, d_minus, 0.0)))


def summarize(samples) -> SampleSummary:
    """Mean, unbiased variance, standard error and fixed quantiles.

    Variance and standard error are None for a single observation.
    """
    x = np.asarray(samples, dtype=np.float64).ravel()
    r = x.size
    if r == 0:
        raise ParameterError("cannot summarize an empty sample")
    mean = compensated_sum(x) / r
    variance = stderr = None
    if r > 1:
        variance = compensated_sum((x - mean) ** 2) / (r - 1)
        stderr = math.sqrt(variance / r)
    quantiles = np.quantile(x, QUANTILE_LEVELS)
    return SampleSummary(
        count=r,
        mean=float(mean),
        variance=variance,
        stderr=stderr,
        quantiles={q: float(v) for q, v in zip(QUANTILE_LEVELS, quantiles)},
    )


def empirical_covariance(samples: np.ndarray) -> np.ndarray:
    """Covariance matrix of the columns of an (R, T) sample matrix."""
    matrix = np.asarray(samples, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] < 2:
        raise ParameterError("covariance needs an (R, T) matrix with R ≥ 2")
    return np.atleast_2d(np.cov(matrix, rowvar=False))
