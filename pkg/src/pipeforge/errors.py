"""Exception types shared across the package."""

from __future__ import annotations


class PipeforgeError(Exception):
    """Base class for all pipeforge errors."""


class LexError(PipeforgeError):
    """Script text could not be read or tokenized; the script is excluded."""


class DuplicateLabel(PipeforgeError):
    """Vocabulary file lists the same operator label twice."""


class MissingEstimatorCategory(PipeforgeError):
    """Vocabulary file contains no Estimator entry."""


class DimensionMismatch(PipeforgeError):
    """Embedding dimensions disagree."""


class EmptyIndex(PipeforgeError):
    """Nearest-neighbor query against an index with no entries."""


class InvalidGraph(PipeforgeError):
    """Pipeline graph violates its structural invariants."""


class VocabMismatch(PipeforgeError):
    """Trace refers to vocabulary ids outside the model's vocabulary."""


class DivergedLoss(PipeforgeError):
    """Training loss became NaN or infinite."""


class NoValidGraph(PipeforgeError):
    """Generation exhausted its retry budget without a valid graph."""


class NoEstimator(PipeforgeError):
    """Graph contains no estimator-category node."""


class EmptyTarget(PipeforgeError):
    """Target column has no non-missing values."""


class AllMissingColumn(PipeforgeError):
    """Column has no non-missing values and cannot be imputed."""


class BudgetExhausted(PipeforgeError):
    """Elapsed time t already reaches or exceeds the total budget T."""


class LengthMismatch(PipeforgeError):
    """Paired sequences have different lengths."""


class ZeroVariance(PipeforgeError):
    """Regression targets are constant; R^2 is undefined."""


class DegenerateSequence(PipeforgeError):
    """Rank correlation is undefined for a constant sequence."""
