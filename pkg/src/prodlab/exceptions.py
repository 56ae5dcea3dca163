"""Custom exceptions for ProdLab.

Every exception carries the process exit code the CLI reports for it:
2 for configuration problems, 3 for runtime failures and 4 for a failed
self-check.
"""

from __future__ import annotations


class ProdLabError(Exception):
    """Base exception class for all ProdLab errors."""

    exit_code = 3


class ConfigError(ProdLabError):
    """Raised when an experiment configuration is invalid."""

    exit_code = 2


class ParameterError(ProdLabError, ValueError):
    """Raised when a numerical operation is called outside its domain."""


class DistributionError(ParameterError):
    """Raised when distribution parameters are not admissible."""


class PositivityError(ParameterError):
    """Raised when a path or sample contains a non-positive entry."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class SingularSystemError(ProdLabError):
    """Raised when the min-norm normal system cannot be solved unregularized."""


class ReplicationError(ProdLabError):
    """Raised when a Monte Carlo replication fails; aborts the whole run."""

    def __init__(self, message: str, replication_index: int):
        super().__init__(message)
        self.replication_index = replication_index


class ExperimentError(ProdLabError):
    """Raised when an experiment fails outside the ProdLab error hierarchy."""


class ResultWriteError(ProdLabError):
    """Raised when experiment outputs cannot be written."""


class CheckFailedError(ProdLabError):
    """Raised when one or more self-check identities fail."""

    exit_code = 4
