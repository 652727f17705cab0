"""Exception types shared across the engine."""


class SpherezoneError(Exception):
    """Base class for engine errors."""


class IdenticalLinesError(SpherezoneError):
    """Two projectively equal lines were intersected."""


class DegenerateInputError(SpherezoneError):
    """Input line set fails the general-position requirement."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class OnBoundaryError(SpherezoneError):
    """A query point lies on one of the arrangement's circles."""


class InternalConsistencyError(SpherezoneError):
    """An exact identity the engine relies on failed; signals a bug."""


class HeadlineFindingError(SpherezoneError):
    """The minimal vertex zone complexity exceeded 5 on some instance."""


class DocumentError(SpherezoneError):
    """A line-set document failed to parse or validate."""

    def __init__(self, message, line_index=None):
        super().__init__(message)
        self.line_index = line_index


class GenerationError(SpherezoneError):
    """Random generation gave up after too many rejections."""


class ExampleVerificationError(SpherezoneError):
    """The built-in tight example failed its census verification."""

    def __init__(self, message, observed=None):
        super().__init__(message)
        self.observed = observed
