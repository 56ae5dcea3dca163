"""Membership scoring against the log-image of the Strassen ball.

A path g lies in the log-limit set when g(x) = int_0^x f'(v) ln(x/v) dv for
some f' with int f'^2 <= 1. The forward operator is discretized with exact
cell integrals of ln(x/v), so a piecewise-constant f' maps to its image at
the grid points without quadrature error, and the least-norm preimage is
found by a Tikhonov-regularized SVD solve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from ..exceptions import ParameterError, SingularSystemError
from ..wiener.grid import GridFunction, Interpretation
from .candidate import BALL_TOLERANCE, StrassenCandidate

# default ridge is this fraction of the mean eigenvalue of the normal matrix
RIDGE_SCALE = 1e-8


def _log_antiderivative(v: np.ndarray, x: np.ndarray) -> np.ndarray:
    # d/dv [v (1 + ln x) - v ln v] = ln(x/v)
    return v * (1.0 + np.log(x)) - xlogy(v, v)


def forward_matrix(m: int, grid_m: int) -> np.ndarray:
    """A[i, j] = int over cell j, cut at x_i, of ln(x_i/v) dv.

    Rows are the grid points x_i = i/grid_m, i = 1..grid_m; columns the m
    cells [j/m, (j+1)/m).
    """
    if m < 1 or grid_m < 1:
        raise ParameterError("forward_matrix needs m ≥ 1 and grid_m ≥ 1")
    x = (np.arange(1, grid_m + 1, dtype=np.float64) / grid_m)[:, None]
    left = (np.arange(m, dtype=np.float64) / m)[None, :]
    right = (np.arange(1, m + 1, dtype=np.float64) / m)[None, :]
    upper = np.minimum(right, x)
    active = left < x
    lower = np.where(active, left, upper)
    values = _log_antiderivative(upper, x) - _log_antiderivative(lower, x)
    return np.where(active, values, 0.0)


def forward_map(candidate: StrassenCandidate, grid_m: int) -> GridFunction:
    """(A f')(x_i) on the uniform grid with grid_m cells; value 0 at x = 0."""
    image = forward_matrix(candidate.m, grid_m) @ candidate.fprime
    return GridFunction(np.concatenate([[0.0], image]), Interpretation.PIECEWISE_LINEAR)


@dataclass(frozen=True)
class MinNormResult:
    """Least-norm preimage of a path and how well it reproduces the path."""

    candidate: StrassenCandidate
    residual: float
    ridge: float

    @property
    def in_ball(self) -> bool:
        return self.candidate.in_ball()


def default_ridge(matrix: np.ndarray) -> float:
    """RIDGE_SCALE * trace(A^T A) / m."""
    return RIDGE_SCALE * float(np.sum(matrix * matrix)) / matrix.shape[1]


def min_norm_representation(
    g: GridFunction, m: int, ridge: float | None = None
) -> MinNormResult:
    """Least-norm f' on m cells whose forward image fits g on its grid.

    Solves min ||A f' - g||^2 + ridge ||f'||^2 through the SVD of A.

    Args:
        g: Path on [0, 1] with g(0) = 0
        m: Number of cells of the candidate
        ridge: Tikhonov weight; None selects default_ridge, 0 asks for the
            unregularized least-squares solution

    Raises:
        SingularSystemError: If ridge = 0 and the normal system is singular
    """
    if m < 1:
        raise ParameterError(f"m ≥ 1 required, got m={m}")
    if g.horizon != 1.0:
        raise ParameterError("the path must live on [0, 1]")
    if abs(g.values[0]) > 1e-12:
        raise ParameterError("the path must start at g(0) = 0")
    if ridge is not None and ridge < 0:
        raise ParameterError(f"ridge must be non-negative, got {ridge}")

    matrix = forward_matrix(m, g.m)
    target = g.values[1:]
    u, s, vt = np.linalg.svd(matrix, full_matrices=False)
    lam = default_ridge(matrix) if ridge is None else float(ridge)
    if lam == 0.0:
        rcond = max(matrix.shape) * np.finfo(np.float64).eps
        if g.m < m or s.size == 0 or s[-1] <= rcond * s[0]:
            raise SingularSystemError(
                f"normal system for {m} cells on a {g.m}-cell grid is singular; "
                "pass a positive ridge"
            )
    filters = s / (s * s + lam)
    fprime = vt.T @ (filters * (u.T @ target))
    residual = float(np.max(np.abs(matrix @ fprime - target)))
    return MinNormResult(StrassenCandidate(fprime), residual, lam)


def limit_set_distance(g: GridFunction, m: int, ridge: float | None = None) -> float:
    """Infeasibility score max(0, ||f'|| - 1) + residual; 0 means inside the set.

    The norm excess is tolerated up to the ball tolerance.
    """
    rep = min_norm_representation(g, m, ridge)
    excess = rep.candidate.norm - 1.0
    if rep.candidate.norm_sq <= 1.0 + BALL_TOLERANCE:
        excess = 0.0
    return max(0.0, excess) + rep.residual
