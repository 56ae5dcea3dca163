"""Tests for the deterministic replication runner."""

import numpy as np
import pytest

from prodlab.engine.logger import RunLogger
from prodlab.engine.runner import (
    CHUNK_SIZE,
    run_clt,
    run_coupled_clt,
    run_fclt,
    run_replications,
)
from prodlab.exceptions import ParameterError, ReplicationError
from prodlab.models import ExperimentConfig, ExperimentKind
from prodlab.variates.distributions import make_distribution
from prodlab.wiener.functionals import limit_covariance


def _config(kind=ExperimentKind.CLT, **kwargs):
    defaults = {"n": 60, "replications": 40, "seed": 20240601}
    defaults.update(kwargs)
    return ExperimentConfig(kind=kind, **defaults)


class TestRunReplications:
    def test_results_in_index_order(self):
        out = run_replications(lambda r: r * r, CHUNK_SIZE + 7, workers=4)

        assert out == [r * r for r in range(CHUNK_SIZE + 7)]

    def test_failure_reports_replication_index(self):
        logger = RunLogger()

        def task(r):
            if r == 5:
                raise ValueError("bad draw")
            return r

        with pytest.raises(ReplicationError, match="replication 5") as exc_info:
            run_replications(task, 10, logger=logger)

        assert exc_info.value.replication_index == 5
        assert "[replication 5]" in logger.warnings()[0]

    def test_zero_count_rejected(self):
        with pytest.raises(ParameterError, match="R ≥ 1"):
            run_replications(lambda r: r, 0)

    def test_chunk_completion_is_logged(self):
        logger = RunLogger()

        run_replications(lambda r: r, 3, logger=logger)

        assert any("replications 0..2 done" in line for line in logger.history)


class TestRunClt:
    def test_summary_and_distance(self):
        result = run_clt(_config())

        assert result.samples.shape == (40,)
        assert result.summaries[0].count == 40
        assert 0.0 <= result.ks_distances[0] <= 1.0
        assert result.tables["samples"][0] == ["replication", "value"]
        assert result.provenance["master_seed"] == 20240601
        assert result.provenance["replication_indices"] == [0, 39]

    def test_worker_count_does_not_change_samples(self):
        one = run_clt(_config(replications=CHUNK_SIZE + 20, workers=1))
        many = run_clt(_config(replications=CHUNK_SIZE + 20, workers=8))

        np.testing.assert_array_equal(one.samples, many.samples)

    def test_single_replication(self):
        result = run_clt(_config(replications=1))

        assert result.summaries[0].variance is None
        assert result.metrics["variance"] is None

    def test_samples_table_optional(self):
        result = run_clt(_config(retain_samples=False))

        assert "samples" not in result.tables
        assert result.summaries[0].count == 40

    def test_wrong_kind_rejected(self):
        with pytest.raises(ParameterError, match="expected a clt config"):
            run_clt(_config(kind=ExperimentKind.FCLT))


class TestRunFclt:
    def test_unit_time_reproduces_clt_samples(self):
        clt = run_clt(_config())
        fclt = run_fclt(_config(kind=ExperimentKind.FCLT, t_grid=[1.0]))

        np.testing.assert_array_equal(fclt.samples[:, 0], clt.samples)

    def test_covariance_tables(self):
        times = [0.25, 0.5, 1.0]
        result = run_fclt(_config(kind=ExperimentKind.FCLT, t_grid=times))

        assert result.samples.shape == (40, 3)
        assert len(result.ks_distances) == 3
        assert result.empirical_covariance.shape == (3, 3)
        assert result.limit_covariance[1, 2] == pytest.approx(limit_covariance(0.5, 1))
        header, rows = result.tables["covariance"]
        assert header == ["s", "t", "empirical", "limit"]
        assert len(rows) == 9
        assert len(result.tables["samples"][1]) == 120

    def test_time_zero_is_degenerate(self):
        result = run_fclt(_config(kind=ExperimentKind.FCLT, t_grid=[0.0, 1.0]))

        assert np.all(result.samples[:, 0] == 0.0)
        assert result.ks_distances[0] == 0.0

    def test_single_replication_has_no_covariance(self):
        result = run_fclt(_config(kind=ExperimentKind.FCLT, replications=1))

        assert result.empirical_covariance is None
        assert "covariance" not in result.tables

    def test_out_of_range_time_rejected(self):
        with pytest.raises(ParameterError, match=r"\[0, 1\]"):
            run_fclt(_config(kind=ExperimentKind.FCLT, t_grid=[1.5]))


class TestRunCoupledClt:
    def test_coupled_generator(self):
        spec = make_distribution("exponential", [1.0])
        result = run_coupled_clt(_config(spec=spec, n=50, replications=8))

        assert result.samples.shape == (8,)
        assert result.provenance["path_generator"] == "coupled"
        assert isinstance(result.metrics["clipped_entries"], int)
