"""The singular functional t -> int_0^t w(x)/x dx and its limit covariance.

On a piecewise-linear path w = a + b x over [x_i, x_{i+1}] the segment
integral is a ln(x_{i+1}/x_i) + b (x_{i+1} - x_i). With w(0) = 0 the first
segment contributes exactly w(x_1), so the 1/x singularity is removable.
On a uniform grid ln(x_{i+1}/x_i) = log1p(1/i) and the functional does not
depend on the horizon's scale.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate

from ..exceptions import ParameterError
from ..prodsum.summation import compensated_cumsum
from .grid import GridFunction, Interpretation


def _require_linear_from_origin(w: GridFunction) -> None:
    if w.interpretation is not Interpretation.PIECEWISE_LINEAR:
        raise ParameterError(
            "the functional needs a piecewise-linear path; "
            "convert step paths with to_piecewise_linear() first"
        )
    if w.values[0] != 0.0:
        raise ParameterError("the functional needs w(0) = 0")


def _segment_integrals(w: GridFunction) -> np.ndarray:
    v = w.values
    dv = np.diff(v)
    i = np.arange(1, w.m, dtype=np.float64)
    log_ratio = np.log1p(1.0 / i)
    # a ln(x_{i+1}/x_i) + b dx with a = v_i - i dv_i, b dx = dv_i
    tail = v[1:-1] * log_ratio + dv[1:] * (1.0 - i * log_ratio)
    return np.concatenate([[v[1]], tail])


def cumulative_functional(w: GridFunction) -> np.ndarray:
    """Return F(t_i) = int_0^{t_i} w(x)/x dx at every grid point (F(0) = 0)."""
    _require_linear_from_origin(w)
    return np.concatenate([[0.0], compensated_cumsum(_segment_integrals(w))])


def _functional_at(w: GridFunction, cumulative: np.ndarray, t: float) -> float:
    dx = w.horizon / w.m
    j = min(int(math.floor(t / dx)), w.m)
    base = float(cumulative[j])
    if j == w.m:
        return base
    x_j = j * dx
    if t <= x_j:
        return base
    v = w.values
    slope = (v[j + 1] - v[j]) / dx
    if j == 0:
        return base + slope * t
    intercept = v[j] - slope * x_j
    return base + intercept * math.log(t / x_j) + slope * (t - x_j)


def log_integral_functional(w: GridFunction, t: float) -> float:
    """Exact int_0^t w(x)/x dx for a piecewise-linear ``w`` with w(0) = 0.

    Args:
        w: Piecewise-linear path
        t: Upper limit in [0, horizon]; the unit interval for standard paths

    Raises:
        ParameterError: If t is out of range or w is a step path
    """
    if not 0.0 <= t <= w.horizon:
        raise ParameterError(f"t must lie in [0, {w.horizon:g}], got {t}")
    return _functional_at(w, cumulative_functional(w), t)


def truncated_functional(w: GridFunction, eps: float, t: float) -> float:
    """H_eps(w)(t): int_eps^t w(x)/x dx for t > eps, 0 for t <= eps."""
    if not 0.0 < eps < 1.0:
        raise ParameterError(f"eps must lie in (0, 1), got {eps}")
    if not 0.0 <= t <= w.horizon:
        raise ParameterError(f"t must lie in [0, {w.horizon:g}], got {t}")
    if t <= eps:
        return 0.0
    cumulative = cumulative_functional(w)
    return _functional_at(w, cumulative, t) - _functional_at(w, cumulative, eps)


def truncation_gap(w: GridFunction, eps: float) -> float:
    """sup over grid points t <= eps of |int_0^t w(x)/x dx|.

    This is the sup-distance between the functional and its eps-truncation
    and goes to zero with eps along every continuous path.
    """
    if not 0.0 < eps < 1.0:
        raise ParameterError(f"eps must lie in (0, 1), got {eps}")
    cumulative = cumulative_functional(w)
    inside = np.abs(cumulative[w.times <= eps])
    at_eps = abs(_functional_at(w, cumulative, min(eps, w.horizon)))
    return float(max(inside.max(), at_eps))


def _check_unit(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ParameterError(f"{name} must lie in [0, 1], got {value}")


def limit_covariance(s: float, t: float) -> float:
    """Covariance of Y(s), Y(t) for Y(t) = int_0^t W(x)/x dx.

    Closed form of the double integral of min(x, y)/(xy) over [0,s]x[0,t]:
    with a = min(s, t), b = max(s, t) it equals 2a + a ln(b/a).
    """
    _check_unit("s", s)
    _check_unit("t", t)
    a, b = min(s, t), max(s, t)
    if a == 0.0:
        return 0.0
    return 2.0 * a + a * math.log(b / a)


def limit_covariance_quadrature(s: float, t: float) -> float:
    """Brute-force 2-D quadrature of min(x, y)/(xy) over [0, s] x [0, t].

    The inner range is split at the diagonal so each piece is smooth.
    """
    _check_unit("s", s)
    _check_unit("t", t)
    if s == 0.0 or t == 0.0:
        return 0.0

    def kernel(y: float, x: float) -> float:
        return min(x, y) / (x * y)

    opts = {"epsabs": 1e-12, "epsrel": 1e-12}
    below, _ = integrate.dblquad(kernel, 0.0, s, 0.0, lambda x: min(x, t), **opts)
    above, _ = integrate.dblquad(kernel, 0.0, s, lambda x: min(x, t), t, **opts)
    return below + above


def limit_covariance_matrix(times) -> np.ndarray:
    """Matrix of limit_covariance over all pairs of ``times``."""
    ts = [float(t) for t in times]
    return np.array([[limit_covariance(s, t) for t in ts] for s in ts])
