"""Discretized elements of the Strassen ball."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..exceptions import ParameterError

# membership slack for the discrete ball
BALL_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class StrassenCandidate:
    """Piecewise-constant derivative f' on m cells of width h = 1/m.

    fprime[j] is the value on cell j, attributed to its midpoint
    v_j = (j + 0.5)/m; f is rebuilt by cumulative sums with f(0) = 0.
    """

    fprime: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.fprime, dtype=np.float64)
        if arr.ndim != 1 or arr.size < 1:
            raise ParameterError("a candidate needs at least one cell")
        if not np.all(np.isfinite(arr)):
            raise ParameterError("candidate derivative values must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "fprime", arr)

    @property
    def m(self) -> int:
        return int(self.fprime.size)

    @property
    def h(self) -> float:
        return 1.0 / self.m

    @property
    def midpoints(self) -> np.ndarray:
        return (np.arange(self.m, dtype=np.float64) + 0.5) / self.m

    @property
    def norm_sq(self) -> float:
        return float(self.h * np.dot(self.fprime, self.fprime))

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq))

    def f(self) -> np.ndarray:
        """f at the cell edges 0, h, ..., 1; f(0) = 0 exactly."""
        return np.concatenate([[0.0], np.cumsum(self.fprime) * self.h])

    def in_ball(self, tol: float = BALL_TOLERANCE) -> bool:
        return self.norm_sq <= 1.0 + tol

    def to_csv(self, path: Path) -> None:
        """Write columns (v, fprime)."""
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["v", "fprime"])
            for v, d in zip(self.midpoints, self.fprime):
                writer.writerow([format(float(v), ".17g"), format(float(d), ".17g")])
