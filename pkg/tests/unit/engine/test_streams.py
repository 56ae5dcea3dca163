"""Tests for counter-based replication streams."""

import numpy as np
import pytest

from prodlab.engine.streams import STREAM_ALGORITHM, SeedStream, derive_stream
from prodlab.exceptions import ParameterError


class TestDeriveStream:
    def test_same_inputs_same_uniforms(self):
        a = derive_stream(123, 4).uniform(100)
        b = derive_stream(123, 4).uniform(100)

        np.testing.assert_array_equal(a, b)

    def test_distinct_indices_differ(self):
        a = derive_stream(123, 0).uniform(10_000)
        b = derive_stream(123, 1).uniform(10_000)

        assert np.any(a != b)

    def test_distinct_seeds_differ(self):
        a = derive_stream(1, 0).uniform(100)
        b = derive_stream(2, 0).uniform(100)

        assert np.any(a != b)

    def test_uniform_mean(self):
        u = derive_stream(99, 7).uniform(1_000_000)

        # standard error of the mean is sqrt(1/12)/1000
        assert abs(u.mean() - 0.5) <= 3 * np.sqrt(1 / 12) / 1000

    def test_uniforms_strictly_inside_unit_interval(self):
        u = derive_stream(5, 0).uniform(200_000)

        assert u.min() > 0.0
        assert u.max() < 1.0

    def test_split_draws_match_single_draw(self):
        stream = derive_stream(31, 2)
        first = stream.uniform(37)
        second = stream.uniform(63)

        np.testing.assert_array_equal(
            np.concatenate([first, second]), derive_stream(31, 2).uniform(100)
        )
        assert stream.drawn == 100

    def test_standard_normal_moments(self):
        z = derive_stream(8, 0).standard_normal(200_000)

        assert abs(z.mean()) < 0.01
        assert abs(z.var() - 1.0) < 0.02

    def test_large_seed_is_masked_to_64_bits(self):
        stream = SeedStream(2**64 + 5, 0)

        assert stream.master_seed == 5

    def test_negative_index_rejected(self):
        with pytest.raises(ParameterError):
            SeedStream(1, -1)

    def test_repr_and_algorithm_name(self):
        assert "replication_index=3" in repr(derive_stream(1, 3))
        assert STREAM_ALGORITHM == "philox4x64-10"
