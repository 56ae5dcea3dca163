"""Data models for ProdLab."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

from .variates.distributions import DistributionSpec, make_distribution


class ExperimentKind(Enum):
    """Experiment kinds; each one is also a CLI subcommand."""

    CLT = "clt"
    FCLT = "fclt"
    LIL = "lil"
    EXTREMAL = "extremal"
    CHECK = "check"


QUANTILE_LEVELS: tuple[float, ...] = (0.01, 0.05, 0.25, 0.50, 0.75, 0.95, 0.99)


def _default_spec() -> DistributionSpec:
    return make_distribution("exponential", [1.0])


@dataclass
class ExperimentConfig:
    """Reproducible description of one experiment."""

    kind: ExperimentKind = ExperimentKind.CLT
    spec: DistributionSpec = field(default_factory=_default_spec)
    n: int = 1000
    replications: int = 1000
    m: int = 256
    t_grid: list[float] = field(default_factory=lambda: [1.0])
    seed: int = 0
    workers: int = 1
    out: Path = field(default_factory=lambda: Path("prodlab-out"))
    retain_samples: bool = True
    n0: int = 1000
    rho: float = 1.2
    cells: int = 2**14
    ridge: float | None = None
    generator: str = "iid"
    seed_generated: bool = False


@dataclass
class SampleSummary:
    """Summary of one empirical sample."""

    count: int
    mean: float
    variance: float | None
    stderr: float | None
    quantiles: dict[float, float]


@dataclass
class ExperimentResult:
    """Outputs of one experiment run together with its provenance."""

    config: ExperimentConfig
    samples: np.ndarray | None = None
    summaries: list[SampleSummary] = field(default_factory=list)
    ks_distances: list[float] = field(default_factory=list)
    empirical_covariance: np.ndarray | None = None
    limit_covariance: np.ndarray | None = None
    tables: dict[str, tuple[list[str], list[tuple[Any, ...]]]] = field(
        default_factory=dict
    )
    metrics: dict[str, Any] = field(default_factory=dict)
    provenance: dict[str, Any] = field(default_factory=dict)
    started_at: str = ""
    wall_seconds: float = 0.0

    @property
    def kind(self) -> ExperimentKind:
        return self.config.kind
