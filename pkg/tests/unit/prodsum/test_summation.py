"""Tests for compensated summation."""

import numpy as np
import pytest

from prodlab.prodsum.summation import (
    CompensatedSum,
    compensated_cumsum,
    compensated_sum,
    two_sum,
)


class TestTwoSum:
    def test_recovers_rounding_error(self):
        s, e = two_sum(np.float64(1e16), np.float64(1.0))

        assert s == 1e16
        assert e == 1.0


class TestCompensatedSum:
    def test_cancellation(self):
        assert compensated_sum([1e16, 1.0, -1e16]) == 1.0

    def test_many_small_terms(self):
        assert compensated_sum(np.full(10**6, 0.1)) == pytest.approx(1e5, abs=1e-9)

    def test_empty(self):
        assert compensated_sum([]) == 0.0

    def test_axis(self):
        x = np.arange(6.0).reshape(2, 3)

        np.testing.assert_array_equal(compensated_sum(x, axis=0), [3.0, 5.0, 7.0])
        np.testing.assert_array_equal(compensated_sum(x), [3.0, 12.0])


class TestCompensatedCumsum:
    def test_prefix_sums(self):
        np.testing.assert_array_equal(
            compensated_cumsum([1.0, 2.0, 3.0]), [1.0, 3.0, 6.0]
        )

    def test_initial_offset(self):
        np.testing.assert_array_equal(
            compensated_cumsum([1.0, 2.0], initial=10.0), [11.0, 13.0]
        )

    def test_cancellation_in_prefix(self):
        out = compensated_cumsum([1e16, 1.0, -1e16, 2.0])

        assert out[2] == 1.0
        assert out[3] == 3.0

    def test_empty_keeps_shape(self):
        assert compensated_cumsum(np.empty((2, 0))).shape == (2, 0)

    def test_last_entry_is_the_total(self):
        x = np.random.default_rng(3).standard_normal(1000)

        assert compensated_cumsum(x)[-1] == compensated_sum(x)


class TestCompensatedSumAccumulator:
    def test_blocks_match_one_shot_sum(self):
        x = np.random.default_rng(8).exponential(size=10_000) * 1e-3
        acc = CompensatedSum()

        for block in np.array_split(x, 7):
            acc.add_block(block)

        assert acc.value == pytest.approx(compensated_sum(x), rel=1e-15)

    def test_cancellation_is_recovered(self):
        acc = CompensatedSum()
        acc.add_block([1e16, 1.0, -1e16])

        assert acc.value == 1.0

    def test_empty_block_is_noop(self):
        acc = CompensatedSum()
        acc.add_block([])

        assert acc.value == 0.0
