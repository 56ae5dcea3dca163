"""Compensated summation built on the TwoSum error-free transformation.

``compensated_cumsum`` is the prefix form of the cascaded summation
algorithm: the naive running sums are exact up to one rounding per step,
the rounding errors are recovered exactly with TwoSum and their own running
sum is added back. Everything is vectorized along the last axis.
"""

from __future__ import annotations

import numpy as np


def two_sum(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return (s, e) with s = fl(a + b) and a + b = s + e exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def compensated_cumsum(values, initial: float = 0.0) -> np.ndarray:
    """Accurate prefix sums of ``values`` along the last axis.

    Args:
        values: Array of summands
        initial: Value the prefix sums start from

    Returns:
        Array of the same shape with out[..., k] = initial + sum(values[..., :k+1])
    """
    x = np.asarray(values, dtype=np.float64)
    if x.shape[-1] == 0:
        return x.copy()
    lead = np.full(x.shape[:-1] + (1,), float(initial))
    padded = np.concatenate([lead, x], axis=-1)
    naive = np.cumsum(padded, axis=-1)
    _, err = two_sum(naive[..., :-1], padded[..., 1:])
    return naive[..., 1:] + np.cumsum(err, axis=-1)


def compensated_sum(values, axis: int = -1) -> np.ndarray | float:
    """Accurate total of ``values`` along ``axis``."""
    x = np.moveaxis(np.asarray(values, dtype=np.float64), axis, -1)
    if x.shape[-1] == 0:
        total = np.zeros(x.shape[:-1])
    else:
        total = compensated_cumsum(x)[..., -1]
    return float(total) if total.ndim == 0 else total


class CompensatedSum:
    """Incremental accumulator keeping a running sum and its rounding carry.

    Used where a sum grows block by block (streaming paths) and must agree
    with a one-shot ``compensated_sum`` of the concatenated blocks.
    """

    def __init__(self) -> None:
        self.sum = 0.0
        self.carry = 0.0

    def add_block(self, values) -> None:
        """Add every entry of ``values`` in order."""
        x = np.asarray(values, dtype=np.float64).ravel()
        if x.size == 0:
            return
        naive = np.cumsum(np.concatenate([[self.sum], x]))
        _, err = two_sum(naive[:-1], x)
        self.sum = float(naive[-1])
        self.carry += float(np.sum(err))

    @property
    def value(self) -> float:
        return self.sum + self.carry
