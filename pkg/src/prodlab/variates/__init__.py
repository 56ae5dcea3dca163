"""Positive laws, reproducible i.i.d. samples and their partial sums."""

from .distributions import DistributionSpec, Family, make_distribution, sample_iid
from .paths import SamplePath, mean_path, partial_sums

__all__ = [
    "DistributionSpec",
    "Family",
    "SamplePath",
    "make_distribution",
    "mean_path",
    "partial_sums",
    "sample_iid",
]
