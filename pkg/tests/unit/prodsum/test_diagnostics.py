"""Tests for the theta remainder and the L1 condition estimate."""

import math

import numpy as np
import pytest

from prodlab.engine.streams import derive_stream
from prodlab.exceptions import ParameterError
from prodlab.prodsum.diagnostics import (
    iid_path,
    l1_condition_estimate,
    max_relative_deviation,
    theta_remainder,
)
from prodlab.variates.distributions import make_distribution
from prodlab.variates.paths import mean_path

UNIT = make_distribution("exponential", [1.0])


def synthetic_source(spec, n, stream):
    return mean_path(spec, n)


class TestThetaRemainder:
    def test_continuous_at_zero(self):
        assert theta_remainder(0.0) == 0.0

    def test_e_minus_one(self):
        value = theta_remainder(math.e - 1.0)

        assert value == pytest.approx((2.0 - math.e) / (math.e - 1.0), rel=1e-12)
        assert value == pytest.approx(-0.41802, abs=1e-5)

    def test_bounded_by_argument_near_zero(self):
        x = np.linspace(-0.5, 0.5, 1001)

        assert np.all(np.abs(theta_remainder(x)) <= np.abs(x))

    def test_domain(self):
        with pytest.raises(ParameterError, match="x > -1"):
            theta_remainder([0.5, -1.0])


class TestIidPath:
    def test_positive_and_deterministic(self):
        a = iid_path(UNIT, 100, derive_stream(1, 2))
        b = iid_path(UNIT, 100, derive_stream(1, 2))

        assert np.all(np.diff(a.values) > 0)
        np.testing.assert_array_equal(a.values, b.values)


class TestL1ConditionEstimate:
    def test_synthetic_mean_paths_give_zero(self):
        estimate = l1_condition_estimate(
            UNIT, 100, 5, master_seed=0, path_source=synthetic_source
        )

        assert estimate.value == 0.0
        assert estimate.stderr == 0.0

    def test_exponential_mean_absolute_deviation(self):
        estimate = l1_condition_estimate(UNIT, 200, 2000, master_seed=17)

        assert estimate.value == pytest.approx(math.sqrt(2 / math.pi), abs=0.06)
        assert estimate.within_bound()

    @pytest.mark.parametrize("n, replications", [(0, 10), (10, 0)])
    def test_preconditions(self, n, replications):
        with pytest.raises(ParameterError):
            l1_condition_estimate(UNIT, n, replications, master_seed=0)


class TestMaxRelativeDeviation:
    def test_mean_path(self):
        assert max_relative_deviation(mean_path(UNIT, 20), UNIT, 1) == 0.0

    def test_non_increasing_in_start_index(self):
        path = iid_path(UNIT, 1000, derive_stream(4, 0))

        values = [max_relative_deviation(path, UNIT, k0) for k0 in (1, 10, 100)]

        assert values[0] >= values[1] >= values[2]

    def test_start_index_range(self):
        with pytest.raises(ParameterError, match=r"\[1, 20\]"):
            max_relative_deviation(mean_path(UNIT, 20), UNIT, 21)
