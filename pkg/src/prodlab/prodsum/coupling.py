"""Synthetic paths strongly coupled to a Wiener path.

S_k := k mu + sigma W(k) realises the strong approximation exactly, which
makes the chain log-product ~ (sigma/mu) int_0^n W(x)/x dx checkable on a
single probability space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import ParameterError
from ..variates.distributions import DistributionSpec
from ..variates.paths import SamplePath
from ..wiener.functionals import log_integral_functional
from ..wiener.grid import GridFunction
from .statistic import log_ratios
from .summation import compensated_sum

# above this fraction of clipped entries a coupled path is flagged
CLIP_WARNING_FRACTION = 0.01


@dataclass(frozen=True)
class CoupledPath:
    """A coupled path plus how many entries were clipped at k mu / 2."""

    path: SamplePath
    clipped: int

    @property
    def clip_fraction(self) -> float:
        return self.clipped / self.path.n

    @property
    def excessive_clipping(self) -> bool:
        return self.clip_fraction > CLIP_WARNING_FRACTION


def _integer_time_values(w: GridFunction, n: int) -> np.ndarray:
    if n < 1:
        raise ParameterError(f"n ≥ 1 required, got n={n}")
    if w.horizon != float(n):
        raise ParameterError(
            f"the Wiener path must be simulated on horizon n={n}, got {w.horizon:g}"
        )
    if w.m % n:
        raise ParameterError(
            f"the Wiener grid resolution m={w.m} must be a multiple of n={n}"
        )
    step = w.m // n
    return w.values[step::step]


def coupled_path(spec: DistributionSpec, w: GridFunction, n: int) -> CoupledPath:
    """S_k = k mu + sigma w(k), clipped below at k mu / 2 to stay positive."""
    k = np.arange(1, n + 1, dtype=np.float64)
    center = k * spec.mu
    raw = center + spec.sigma * _integer_time_values(w, n)
    floor = 0.5 * center
    low = raw < floor
    return CoupledPath(
        path=SamplePath(np.where(low, floor, raw)), clipped=int(np.count_nonzero(low))
    )


def coupling_discrepancy(spec: DistributionSpec, w: GridFunction, n: int) -> float:
    """|sum_k ln(S_k/(k mu)) - (sigma/mu) int_0^n w(x)/x dx| / sqrt(n)."""
    coupled = coupled_path(spec, w, n)
    log_sum = compensated_sum(log_ratios(coupled.path, spec))
    integral = log_integral_functional(w, float(n))
    return abs(log_sum - integral / spec.gamma) / math.sqrt(n)
