"""Built-in check suite of closed-form and quadrature identities.

Every check is deterministic and cheap; the whole suite runs in seconds and
needs no random numbers.
"""

from __future__ import annotations

import math
import time
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from ..engine.runner import start_result
from ..extremal.limitset import min_norm_representation
from ..extremal.optimizer import extremal_function, maximize_functional
from ..models import ExperimentConfig, ExperimentResult
from ..prodsum.diagnostics import theta_remainder
from ..prodsum.summation import compensated_sum
from ..wiener.functionals import (
    limit_covariance,
    limit_covariance_quadrature,
    log_integral_functional,
    truncation_gap,
)
from ..wiener.grid import grid_from_callable

EXTREMAL_CELLS = 2**14
MIN_NORM_CELLS = 32


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity.

    With ``upper_bound`` the check passes when value <= target + tolerance,
    otherwise when |value - target| <= tolerance.
    """

    name: str
    value: float
    target: float
    tolerance: float
    upper_bound: bool = False

    @property
    def passed(self) -> bool:
        if not math.isfinite(self.value):
            return False
        if self.upper_bound:
            return self.value <= self.target + self.tolerance
        return abs(self.value - self.target) <= self.tolerance

    def row(self) -> tuple:
        return (self.name, self.value, self.target, self.tolerance, self.passed)


def _variance_identity() -> list[CheckResult]:
    return [
        CheckResult(
            "variance_quadrature", limit_covariance_quadrature(1.0, 1.0), 2.0, 1e-6
        )
    ]


def _covariance_closed_form() -> list[CheckResult]:
    checks = []
    for s, t in ((0.1, 0.1), (0.25, 0.25), (0.5, 0.5), (0.5, 1.0), (0.25, 0.75)):
        checks.append(
            CheckResult(
                f"covariance_{s:g}_{t:g}",
                limit_covariance(s, t),
                limit_covariance_quadrature(s, t),
                1e-6,
            )
        )
    return checks


def _extremal_values() -> list[CheckResult]:
    checks = []
    solution = None
    for t in (0.25, 0.5, 1.0):
        solution = maximize_functional(t, EXTREMAL_CELLS)
        checks.append(
            CheckResult(
                f"extremal_value_{t:g}", solution.value, math.sqrt(2 * t), 1e-3
            )
        )
    edges = np.linspace(0.0, 1.0, EXTREMAL_CELLS + 1)
    sup_gap = float(np.max(np.abs(solution.argmax.f() - extremal_function(edges))))
    checks.append(CheckResult("extremal_function_sup", sup_gap, 0.0, 1e-2, True))

    iterative = maximize_functional(1.0, 256, method="projected_gradient")
    closed = maximize_functional(1.0, 256)
    checks.append(
        CheckResult(
            "projected_gradient_agreement", iterative.value, closed.value, 1e-9
        )
    )
    return checks


def _functional_identities() -> list[CheckResult]:
    identity = grid_from_callable(lambda x: x, 1024)
    return [
        CheckResult(
            "functional_of_identity",
            log_integral_functional(identity, 1.0),
            1.0,
            1e-12,
        ),
        CheckResult(
            "truncation_gap_identity", truncation_gap(identity, 0.125), 0.125, 1e-12
        ),
    ]


def _min_norm_identity() -> list[CheckResult]:
    g = grid_from_callable(lambda x: x, MIN_NORM_CELLS)
    rep = min_norm_representation(g, MIN_NORM_CELLS, ridge=0.0)
    deviation = float(np.max(np.abs(rep.candidate.fprime - 1.0)))
    return [
        CheckResult("min_norm_residual", rep.residual, 0.0, 1e-6, True),
        CheckResult("min_norm_derivative", deviation, 0.0, 1e-6, True),
    ]


def _theta_bounds() -> list[CheckResult]:
    x = np.linspace(-0.5, 0.5, 2001)
    x = x[x != 0.0]
    ratio = float(np.max(np.abs(theta_remainder(x)) / np.abs(x)))
    e1 = math.e - 1.0
    return [
        CheckResult("theta_bound_half", ratio, 1.0, 0.0, True),
        CheckResult(
            "theta_e_minus_1", theta_remainder(e1), (2.0 - math.e) / e1, 1e-12
        ),
    ]


def _compensation() -> list[CheckResult]:
    total = compensated_sum([1e16, 1.0, -1e16])
    return [CheckResult("compensated_sum", total, 1.0, 0.0)]


CHECK_GROUPS: tuple[Callable[[], list[CheckResult]], ...] = (
    _variance_identity,
    _covariance_closed_form,
    _extremal_values,
    _functional_identities,
    _min_norm_identity,
    _theta_bounds,
    _compensation,
)


def run_checks() -> list[CheckResult]:
    """Evaluate every identity of the suite in a fixed order."""
    return [check for group in CHECK_GROUPS for check in group()]


def run_check(config: ExperimentConfig) -> ExperimentResult:
    """Run the suite and package it as an experiment result with check.csv."""
    result, started = start_result(config)
    result.provenance["replication_indices"] = []
    checks = run_checks()
    result.tables["check"] = (
        ["name", "value", "target", "tolerance", "passed"],
        [c.row() for c in checks],
    )
    failed = [c.name for c in checks if not c.passed]
    result.metrics["checks"] = len(checks)
    result.metrics["failed"] = failed
    result.wall_seconds = time.perf_counter() - started
    return result
