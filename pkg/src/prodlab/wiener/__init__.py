"""Wiener paths on uniform grids and the functional int_0^t W(x)/x dx."""

from .functionals import (
    cumulative_functional,
    limit_covariance,
    limit_covariance_matrix,
    limit_covariance_quadrature,
    log_integral_functional,
    truncated_functional,
    truncation_gap,
)
from .grid import GridFunction, Interpretation, grid_from_callable
from .simulate import DEFAULT_RESOLUTION, simulate_wiener

__all__ = [
    "DEFAULT_RESOLUTION",
    "GridFunction",
    "Interpretation",
    "cumulative_functional",
    "grid_from_callable",
    "limit_covariance",
    "limit_covariance_matrix",
    "limit_covariance_quadrature",
    "log_integral_functional",
    "simulate_wiener",
    "truncated_functional",
    "truncation_gap",
]
