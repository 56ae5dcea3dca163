"""Law-of-iterated-logarithm trajectories."""

from .tracker import (
    LilPoint,
    LilTracker,
    envelope_slack,
    lil_checkpoints,
    lil_normalized,
    lil_trajectory,
    run_lil,
    strassen_scaled_path,
    track_path,
)

__all__ = [
    "LilPoint",
    "LilTracker",
    "envelope_slack",
    "lil_checkpoints",
    "lil_normalized",
    "lil_trajectory",
    "run_lil",
    "strassen_scaled_path",
    "track_path",
]
