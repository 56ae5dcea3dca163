"""Tests for the extremal problem over the Strassen ball."""

import math

import numpy as np
import pytest

from prodlab.exceptions import ParameterError
from prodlab.extremal.optimizer import (
    ball_maximizer,
    envelope,
    extremal_function,
    log_kernel,
    maximize_functional,
    run_extremal,
)
from prodlab.models import ExperimentConfig, ExperimentKind


class TestEnvelope:
    def test_values(self):
        assert envelope(0.5) == 1.0
        np.testing.assert_allclose(envelope([0.0, 2.0 / 9.0]), [0.0, 2.0 / 3.0])

    def test_domain(self):
        with pytest.raises(ParameterError, match=r"\[0, 1\]"):
            envelope(1.5)


class TestExtremalFunction:
    def test_end_points(self):
        assert extremal_function(0.0) == 0.0
        assert extremal_function(1.0) == pytest.approx(1.0 / math.sqrt(2.0))

    def test_matches_closed_form(self):
        u = np.array([0.1, 0.5, 0.9])

        np.testing.assert_allclose(
            extremal_function(u), (u - u * np.log(u)) / math.sqrt(2.0)
        )


class TestBallMaximizer:
    def test_zero_kernel(self):
        value, direction = ball_maximizer(np.zeros(4), 0.25)

        assert value == 0.0
        np.testing.assert_array_equal(direction, np.zeros(4))

    def test_unit_norm_direction(self):
        value, direction = ball_maximizer(np.array([3.0, 4.0]), 1.0)

        assert value == 5.0
        np.testing.assert_allclose(direction, [0.6, 0.8])

    def test_direction_is_scale_free(self):
        c = log_kernel(0.8, 64)

        value, direction = ball_maximizer(c, 1.0 / 64)
        scaled_value, scaled_direction = ball_maximizer(7.5 * c, 1.0 / 64)

        np.testing.assert_allclose(scaled_direction, direction, rtol=1e-14)
        assert scaled_value == pytest.approx(7.5 * value, rel=1e-14)

    def test_kernel_vanishes_beyond_t(self):
        c = log_kernel(0.5, 4)

        assert c[2] == 0.0 and c[3] == 0.0
        assert c[0] == pytest.approx(math.log(4.0))


class TestMaximizeFunctional:
    @pytest.mark.parametrize("t", [0.25, 0.5, 1.0])
    def test_value_approaches_envelope(self, t):
        solution = maximize_functional(t, 2**14)

        assert solution.value == pytest.approx(math.sqrt(2 * t), abs=1e-3)
        assert abs(solution.gap) < 1e-3
        assert solution.argmax.norm_sq == pytest.approx(1.0, abs=1e-12)

    def test_argmax_approximates_extremal_function(self):
        solution = maximize_functional(1.0, 2**12)
        edges = np.linspace(0.0, 1.0, 2**12 + 1)

        gap = np.max(np.abs(solution.argmax.f() - extremal_function(edges)))

        assert gap < 1e-2

    @pytest.mark.parametrize("t", [0.25, 0.5, 1.0])
    def test_gap_shrinks_as_cells_double(self, t):
        gaps = [maximize_functional(t, 2**k).gap for k in range(6, 13)]

        assert all(g > 0 for g in gaps)
        assert all(a > b for a, b in zip(gaps, gaps[1:]))

    @pytest.mark.parametrize("m", [16, 256])
    def test_never_exceeds_envelope(self, m):
        for x in np.linspace(0.05, 1.0, 20):
            assert maximize_functional(x, m).value <= envelope(x)

    def test_value_increases_with_t(self):
        values = [maximize_functional(t, 512).value for t in (0.2, 0.4, 0.8)]

        assert values[0] < values[1] < values[2]

    def test_projected_gradient_agrees(self):
        closed = maximize_functional(0.75, 256)
        iterative = maximize_functional(0.75, 256, method="projected_gradient")

        assert iterative.value == pytest.approx(closed.value, abs=1e-9)
        # starts away from the optimum, so the iteration does real work
        assert 10 < iterative.iterations < 1000
        assert iterative.method == "projected_gradient"

    @pytest.mark.parametrize(
        "kwargs, message",
        [
            ({"t": 0.0, "m": 16}, r"\(0, 1\]"),
            ({"t": 1.2, "m": 16}, r"\(0, 1\]"),
            ({"t": 0.5, "m": 1}, "m ≥ 2"),
            ({"t": 0.5, "m": 16, "method": "newton"}, "method"),
        ],
    )
    def test_invalid_arguments(self, kwargs, message):
        with pytest.raises(ParameterError, match=message):
            maximize_functional(**kwargs)


class TestRunExtremal:
    def test_tables_and_metrics(self):
        config = ExperimentConfig(
            kind=ExperimentKind.EXTREMAL, t_grid=[0.5, 1.0], cells=1024
        )

        result = run_extremal(config)

        header, rows = result.tables["extremal"]
        assert header == ["t", "m", "value", "closed_form", "gap"]
        assert [row[0] for row in rows] == [0.5, 1.0]
        assert rows[1][3] == pytest.approx(math.sqrt(2.0))
        assert len(result.tables["candidate"][1]) == 1024
        assert result.metrics["max_gap"] < 1e-2
        assert result.metrics["argmax_norm_sq"] == pytest.approx(1.0)

    def test_wrong_kind(self):
        with pytest.raises(ParameterError, match="extremal config"):
            run_extremal(ExperimentConfig(kind=ExperimentKind.CLT))
