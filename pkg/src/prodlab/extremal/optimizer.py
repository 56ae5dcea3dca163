"""sup over the Strassen ball of int_0^t f(u)/u du.

Exchanging the integrals gives int_0^t f(u)/u du = <c, f'> with kernel
c(v) = ln(t/v) on (0, t) and 0 on [t, 1], so on the unit ball of L2 the
supremum is ||c|| = sqrt(2t), attained at f' = c/||c||. The discrete
problem keeps that structure with the h-weighted inner product, which is
why the closed form is exact there too.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from ..engine.runner import start_result
from ..exceptions import ParameterError
from ..models import ExperimentConfig, ExperimentKind, ExperimentResult
from .candidate import StrassenCandidate

METHODS = ("closed_form", "projected_gradient")


@dataclass(frozen=True)
class ExtremalSolution:
    """Optimizer report for one t."""

    t: float
    value: float
    argmax: StrassenCandidate
    method: str
    iterations: int = 0

    @property
    def m(self) -> int:
        return self.argmax.m

    @property
    def closed_form(self) -> float:
        return envelope(self.t)

    @property
    def gap(self) -> float:
        return self.closed_form - self.value


def envelope(x):
    """sqrt(2x): the pointwise supremum of int_0^x f(u)/u du over the ball."""
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ParameterError("envelope is defined on [0, 1]")
    out = np.sqrt(2.0 * arr)
    return float(out) if out.ndim == 0 else out


def extremal_function(u):
    """(u - u ln u)/sqrt(2), the maximizer for t = 1."""
    arr = np.asarray(u, dtype=np.float64)
    out = (arr - xlogy(arr, arr)) / math.sqrt(2.0)
    return float(out) if out.ndim == 0 else out


def log_kernel(t: float, m: int) -> np.ndarray:
    """c(v_j) = ln(t/v_j) for midpoints v_j < t, else 0."""
    v = (np.arange(m, dtype=np.float64) + 0.5) / m
    inside = v < t
    c = np.zeros(m)
    c[inside] = np.log(t / v[inside])
    return c


def ball_maximizer(c: np.ndarray, h: float) -> tuple[float, np.ndarray]:
    """max <c, x>_h over ||x||_h <= 1: returns (||c||_h, c/||c||_h)."""
    norm = math.sqrt(h * float(np.dot(c, c)))
    if norm == 0.0:
        return 0.0, np.zeros_like(c)
    return norm, c / norm


def _projected_gradient(
    c: np.ndarray, h: float, step: float, max_iter: int, tol: float
) -> tuple[np.ndarray, int]:
    # f' = 1 has unit norm and is not aligned with c
    x = np.ones_like(c)
    for k in range(1, max_iter + 1):
        y = x + step * c
        x_new = y / max(1.0, math.sqrt(h * float(np.dot(y, y))))
        if math.sqrt(h * float(np.dot(x_new - x, x_new - x))) < tol:
            return x_new, k
        x = x_new
    return x, max_iter


def maximize_functional(
    t: float,
    m: int,
    method: str = "closed_form",
    step: float = 0.1,
    max_iter: int = 1000,
    tol: float = 1e-12,
) -> ExtremalSolution:
    """Maximize int_0^t f(u)/u du over candidates with h * sum f'^2 <= 1.

    Args:
        t: Upper limit in (0, 1]
        m: Number of cells (m >= 2)
        method: "closed_form" (exact c/||c||) or "projected_gradient"
            (iterative cross-check of the same problem)

    Returns:
        ExtremalSolution with the discrete value and argmax candidate
    """
    if not 0.0 < t <= 1.0:
        raise ParameterError(f"t must lie in (0, 1], got {t}")
    if m < 2:
        raise ParameterError(f"m ≥ 2 required, got m={m}")
    if method not in METHODS:
        raise ParameterError(f"method must be one of {METHODS}, got '{method}'")
    h = 1.0 / m
    c = log_kernel(t, m)
    if method == "closed_form":
        value, direction = ball_maximizer(c, h)
        return ExtremalSolution(t, value, StrassenCandidate(direction), method)
    direction, iterations = _projected_gradient(c, h, step, max_iter, tol)
    value = h * float(np.dot(c, direction))
    return ExtremalSolution(t, value, StrassenCandidate(direction), method, iterations)


def run_extremal(config: ExperimentConfig) -> ExperimentResult:
    """Optimizer value against sqrt(2t) for every t in t_grid."""
    if config.kind is not ExperimentKind.EXTREMAL:
        raise ParameterError(f"expected an extremal config, got {config.kind.value}")
    if not config.t_grid:
        raise ParameterError("extremal needs a non-empty t_grid")
    result, started = start_result(config)
    rows = []
    solution = None
    for t in config.t_grid:
        solution = maximize_functional(t, config.cells)
        rows.append((t, solution.m, solution.value, solution.closed_form, solution.gap))
    result.tables["extremal"] = (["t", "m", "value", "closed_form", "gap"], rows)
    candidate = solution.argmax
    result.tables["candidate"] = (
        ["v", "fprime"],
        [(float(v), float(d)) for v, d in zip(candidate.midpoints, candidate.fprime)],
    )
    result.metrics["max_gap"] = max(abs(r[4]) for r in rows)
    result.metrics["argmax_norm_sq"] = candidate.norm_sq
    result.wall_seconds = time.perf_counter() - started
    return result
