"""Positive finite-variance laws with closed-form moments."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import ndtri

from ..exceptions import DistributionError, ParameterError


class Family(Enum):
    """Supported families; all are supported on (0, inf) with finite variance."""

    EXPONENTIAL = "exponential"
    UNIFORM = "uniform"
    LOGNORMAL = "lognormal"
    PARETO_SHIFTED = "pareto_shifted"

    @classmethod
    def parse(cls, name: str | Family) -> Family:
        if isinstance(name, Family):
            return name
        key = name.strip().lower().replace("-", "_")
        aliases = {"paretoshifted": "pareto_shifted", "lomax": "pareto_shifted"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            valid = ", ".join(f.value for f in cls)
            raise DistributionError(
                f"Unknown family '{name}'. Valid families: {valid}"
            ) from None


_ARITY = {
    Family.EXPONENTIAL: ("rate",),
    Family.UNIFORM: ("a", "b"),
    Family.LOGNORMAL: ("location", "scale"),
    Family.PARETO_SHIFTED: ("shape", "scale"),
}


@dataclass(frozen=True)
class DistributionSpec:
    """A positive law with exact mean, standard deviation and gamma = mu/sigma."""

    family: Family
    params: tuple[float, ...]
    mu: float
    sigma: float

    @property
    def gamma(self) -> float:
        return self.mu / self.sigma

    @property
    def variance(self) -> float:
        return self.sigma * self.sigma

    def describe(self) -> str:
        names = _ARITY[self.family]
        args = ", ".join(f"{k}={v:g}" for k, v in zip(names, self.params))
        return f"{self.family.value}({args})"

    def to_dict(self) -> dict:
        return {"family": self.family.value, "params": list(self.params)}

    def inverse_cdf(self, u: np.ndarray) -> np.ndarray:
        """Map uniforms in (0, 1) to draws from the law."""
        p = self.params
        if self.family is Family.EXPONENTIAL:
            return -np.log1p(-u) / p[0]
        if self.family is Family.UNIFORM:
            return p[0] + (p[1] - p[0]) * u
        if self.family is Family.LOGNORMAL:
            return np.exp(p[0] + p[1] * ndtri(u))
        # Lomax: scale * ((1 - u)**(-1/shape) - 1)
        return p[1] * np.expm1(-np.log1p(-u) / p[0])


def make_distribution(
    family: str | Family, params: Sequence[float]
) -> DistributionSpec:
    """Build a DistributionSpec, validating the family's admissible region.

    Args:
        family: Family name (case-insensitive) or Family member
        params: Exponential(rate), Uniform(a, b), LogNormal(location, scale),
            ParetoShifted(shape, scale)

    Returns:
        DistributionSpec with closed-form mu and sigma

    Raises:
        DistributionError: If the parameters are not admissible
    """
    fam = Family.parse(family)
    names = _ARITY[fam]
    try:
        values = tuple(float(v) for v in params)
    except (TypeError, ValueError):
        raise DistributionError(f"{fam.value} parameters must be numbers") from None
    if len(values) != len(names):
        raise DistributionError(
            f"{fam.value} takes {len(names)} parameter(s) ({', '.join(names)}), "
            f"got {len(values)}"
        )
    if not all(math.isfinite(v) for v in values):
        raise DistributionError(f"{fam.value} parameters must be finite")

    if fam is Family.EXPONENTIAL:
        (rate,) = values
        if rate <= 0:
            raise DistributionError("exponential requires rate > 0")
        mu = sigma = 1.0 / rate
    elif fam is Family.UNIFORM:
        a, b = values
        if a < 0:
            raise DistributionError("uniform requires a >= 0 (positive support)")
        if not a < b:
            raise DistributionError("uniform requires a < b")
        mu = 0.5 * (a + b)
        sigma = (b - a) / math.sqrt(12.0)
    elif fam is Family.LOGNORMAL:
        location, scale = values
        if scale <= 0:
            raise DistributionError("lognormal requires scale > 0")
        mu = math.exp(location + 0.5 * scale * scale)
        sigma = mu * math.sqrt(math.expm1(scale * scale))
    else:
        shape, scale = values
        if scale <= 0:
            raise DistributionError("pareto_shifted requires scale > 0")
        if shape <= 2:
            raise DistributionError(
                "pareto_shifted requires shape > 2: infinite variance otherwise"
            )
        mu = scale / (shape - 1.0)
        sigma = mu * math.sqrt(shape / (shape - 2.0))

    return DistributionSpec(family=fam, params=values, mu=mu, sigma=sigma)


def sample_iid(spec: DistributionSpec, n: int, stream) -> np.ndarray:
    """Draw ``n`` i.i.d. variates from ``spec`` using ``stream``.

    The result is a deterministic function of (spec, n, stream state).
    """
    if n < 1:
        raise ParameterError(f"n ≥ 1 required, got n={n}")
    return spec.inverse_cdf(stream.uniform(n))
