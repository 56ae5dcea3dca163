"""The Strassen ball: extremal functionals and limit-set membership."""

from .candidate import BALL_TOLERANCE, StrassenCandidate
from .limitset import (
    MinNormResult,
    forward_map,
    forward_matrix,
    limit_set_distance,
    min_norm_representation,
)
from .optimizer import (
    ExtremalSolution,
    envelope,
    extremal_function,
    maximize_functional,
    run_extremal,
)

__all__ = [
    "BALL_TOLERANCE",
    "ExtremalSolution",
    "MinNormResult",
    "StrassenCandidate",
    "envelope",
    "extremal_function",
    "forward_map",
    "forward_matrix",
    "limit_set_distance",
    "maximize_functional",
    "min_norm_representation",
    "run_extremal",
]
