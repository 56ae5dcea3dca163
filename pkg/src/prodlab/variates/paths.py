"""Sample paths S_1..S_n of positive partial sums."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..exceptions import ParameterError, PositivityError
from ..prodsum.summation import compensated_cumsum
from .distributions import DistributionSpec


def _first_non_positive(values: np.ndarray) -> int | None:
    bad = np.flatnonzero(~(values > 0))
    return int(bad[0]) if bad.size else None


@dataclass(frozen=True, eq=False)
class SamplePath:
    """A finite sequence S_1..S_n of strictly positive reals."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ParameterError("a sample path needs n ≥ 1 values")
        if not np.all(np.isfinite(arr)):
            raise ParameterError("sample path values must be finite")
        idx = _first_non_positive(arr)
        if idx is not None:
            raise PositivityError(
                f"S_{idx + 1} = {arr[idx]!r} is not positive", index=idx + 1
            )
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return int(self.values.size)

    def head(self, k: int) -> SamplePath:
        """Return the path truncated to S_1..S_k."""
        if not 1 <= k <= self.n:
            raise ParameterError(f"k must lie in [1, {self.n}], got {k}")
        return SamplePath(self.values[:k])

    def scaled(self, c: float) -> SamplePath:
        return SamplePath(self.values * c)

    def to_csv(self, path: Path) -> None:
        """Write columns (k, S_k)."""
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["k", "S_k"])
            for k, s in enumerate(self.values, start=1):
                writer.writerow([k, format(float(s), ".17g")])


def partial_sums(x) -> SamplePath:
    """Return S_k = x_1 + ... + x_k for positive summands.

    Raises:
        PositivityError: If an entry is not positive (index is 1-based)
    """
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ParameterError("partial_sums needs a non-empty 1-D sequence")
    idx = _first_non_positive(arr)
    if idx is not None:
        raise PositivityError(
            f"entry {idx + 1} is not positive ({arr[idx]!r})", index=idx + 1
        )
    return SamplePath(compensated_cumsum(arr))


def mean_path(spec: DistributionSpec, n: int) -> SamplePath:
    """Synthetic path S_k = k * mu, on which every log ratio vanishes."""
    if n < 1:
        raise ParameterError(f"n ≥ 1 required, got n={n}")
    return SamplePath(np.arange(1, n + 1, dtype=np.float64) * spec.mu)
