"""Functions sampled on a uniform grid."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from ..exceptions import ParameterError


class Interpretation(Enum):
    """How grid values extend to the whole interval."""

    CADLAG_STEP = "cadlag_step"
    PIECEWISE_LINEAR = "piecewise_linear"


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Values at t_i = i * horizon / m, i = 0..m.

    CADLAG_STEP holds each value on [t_i, t_{i+1}); PIECEWISE_LINEAR
    interpolates linearly between grid points.
    """

    values: np.ndarray
    interpretation: Interpretation = Interpretation.PIECEWISE_LINEAR
    horizon: float = 1.0

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=np.float64)
        if arr.ndim != 1 or arr.size < 2:
            raise ParameterError("a grid function needs m ≥ 1 (m + 1 values)")
        if not np.all(np.isfinite(arr)):
            raise ParameterError("grid function values must be finite")
        if not self.horizon > 0:
            raise ParameterError("horizon must be positive")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def m(self) -> int:
        return int(self.values.size - 1)

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.m + 1, dtype=np.float64) * (self.horizon / self.m)

    def at(self, t):
        """Evaluate at time(s) ``t`` in [0, horizon]."""
        tt = np.asarray(t, dtype=np.float64)
        if np.any(tt < 0) or np.any(tt > self.horizon):
            raise ParameterError(f"t must lie in [0, {self.horizon:g}]")
        if self.interpretation is Interpretation.PIECEWISE_LINEAR:
            out = np.interp(tt, self.times, self.values)
        else:
            idx = np.minimum(np.floor(tt * self.m / self.horizon), self.m)
            out = self.values[idx.astype(np.int64)]
        return float(out) if np.ndim(out) == 0 else out

    def to_piecewise_linear(self) -> GridFunction:
        """Reinterpret the grid values as a piecewise-linear function."""
        return GridFunction(self.values, Interpretation.PIECEWISE_LINEAR, self.horizon)

    def scaled(self, c: float) -> GridFunction:
        return GridFunction(self.values * c, self.interpretation, self.horizon)

    def to_csv(self, path: Path) -> None:
        """Write columns (t, value)."""
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["t", "value"])
            for t, v in zip(self.times, self.values):
                writer.writerow([format(float(t), ".17g"), format(float(v), ".17g")])


def grid_from_callable(
    func,
    m: int,
    horizon: float = 1.0,
    interpretation: Interpretation = Interpretation.PIECEWISE_LINEAR,
) -> GridFunction:
    """Sample ``func`` on the uniform grid with m cells."""
    if m < 1:
        raise ParameterError(f"m ≥ 1 required, got m={m}")
    t = np.arange(m + 1, dtype=np.float64) * (horizon / m)
    return GridFunction(np.asarray(func(t), dtype=np.float64), interpretation, horizon)
