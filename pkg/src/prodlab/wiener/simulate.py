"""Standard Wiener paths on uniform grids."""

from __future__ import annotations

import math

import numpy as np

from ..exceptions import ParameterError
from ..prodsum.summation import compensated_cumsum
from .grid import GridFunction, Interpretation

# per unit of horizon; keeps grid bias of the functional below Monte Carlo noise
DEFAULT_RESOLUTION = 2**12


def simulate_wiener(m: int | None, horizon: float, stream) -> GridFunction:
    """Simulate W on t_i = i * horizon / m with W(0) = 0.

    Increments are independent centred Gaussians of variance horizon / m.

    Args:
        m: Number of grid cells; None uses DEFAULT_RESOLUTION per unit horizon
        horizon: Length T of the time interval
        stream: SeedStream owning the randomness

    Returns:
        Piecewise-linear GridFunction of the path
    """
    if not horizon > 0:
        raise ParameterError(f"horizon must be positive, got {horizon}")
    if m is None:
        m = max(1, math.ceil(DEFAULT_RESOLUTION * horizon))
    if m < 1:
        raise ParameterError(f"m ≥ 1 required, got m={m}")
    increments = stream.standard_normal(m) * math.sqrt(horizon / m)
    values = np.concatenate([[0.0], compensated_cumsum(increments)])
    return GridFunction(values, Interpretation.PIECEWISE_LINEAR, float(horizon))
