"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for every error raised by the algebra engine."""


class DegreeMismatchError(EngineError):
    pass


class ParityMismatchError(EngineError):
    pass


class UnknownGeneratorError(EngineError):
    pass


class NotSolvableError(EngineError):
    pass


class NotLinearDifferentialError(EngineError):
    pass


class ResidualOccurrenceError(EngineError):
    pass


class NotACocycleError(EngineError):
    pass


class ResourceLimitError(EngineError):
    pass


class UnsupportedDimensionError(EngineError):
    pass


class VerificationFailedError(EngineError):
    pass
