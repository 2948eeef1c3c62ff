"""Shared exception types.

Contract violations that callers are expected to branch on get their own
class; garden-variety misuse raises ValueError directly at the call site.
"""


class FeatureLabError(Exception):
    """Base class for all library-specific errors."""


class ExpressionSyntaxError(FeatureLabError):
    """Malformed index expression. Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvaluationError(FeatureLabError):
    """Expression evaluation failed on a concrete sample (division by zero)."""


class WavelengthRangeError(FeatureLabError):
    """Requested wavelength cannot be bound to any band of the grid."""


class IngestError(FeatureLabError):
    """CSV input violates a hard structural requirement."""


class ConvergenceWarning(UserWarning):
    """Solver hit its iteration budget before reaching the tolerance."""


class RfeError(FeatureLabError):
    """Training failed mid-elimination; carries the partial trace."""

    def __init__(self, message: str, eliminated: list):
        super().__init__(message)
        self.eliminated = eliminated


class BusySessionError(FeatureLabError):
    """A job is already running for this session."""


class NotFoundError(FeatureLabError):
    """Unknown dataset, session, or job id."""
