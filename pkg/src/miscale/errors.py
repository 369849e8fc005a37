"""Exception hierarchy.

Everything raised on purpose by this package derives from :class:`MiscaleError`
so callers can catch library failures without swallowing genuine bugs. Most
input-shaped failures also derive from ``ValueError`` so numpy-style calling
code behaves as expected.
"""


class MiscaleError(Exception):
    """Base class for all errors raised by miscale."""


class FormatError(MiscaleError, ValueError):
    """A file or record does not match its declared format."""


class TruncatedFileError(FormatError):
    """A binary payload ends before the header says it should."""


class InsufficientDataError(MiscaleError, ValueError):
    """Not enough input to produce even one output record."""


class ModalityError(MiscaleError, ValueError):
    """Operation applied to a dataset of the wrong modality or geometry."""


class BoundsError(MiscaleError, ValueError):
    """A parameter is outside its documented range."""


class FamilyError(MiscaleError, ValueError):
    """Partition family incompatible with the data geometry."""


class SpecError(MiscaleError, ValueError):
    """A generator or network specification violates its invariants."""


class NumericalRankError(MiscaleError, ValueError):
    """A matrix that must be positive definite is numerically singular."""


class PartitionError(MiscaleError, ValueError):
    """A partition is invalid for the requested operation (e.g. empty block)."""


class CompositionError(MiscaleError, ValueError):
    """Adjacent network layers have incompatible shapes."""


class StateError(MiscaleError, RuntimeError):
    """Operation invoked before its prerequisite state exists."""


class BatchError(MiscaleError, ValueError):
    """A batch is empty or too small for the requested operation."""


class GeometryError(MiscaleError, ValueError):
    """Requested network architecture does not fit the input geometry."""


class OrderingError(MiscaleError, ValueError):
    """Partition is not a prefix under any supported coordinate ordering."""


class DegenerateDataError(MiscaleError, ValueError):
    """Data too degenerate for the estimator (e.g. zero neighbor distances)."""


class DomainError(MiscaleError, ValueError):
    """Curve or fit-window contents outside the model's domain."""


class TrainingInstabilityError(MiscaleError, RuntimeError):
    """Estimator training diverged. Carries the partial trace for post-mortem."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
