"""Exception hierarchy shared by every module."""


class EscortCodeError(ValueError):
    """Base class for all data and usage errors raised by the package."""


class NegativeProbability(EscortCodeError):
    pass


class NotNormalized(EscortCodeError):
    pass


class EmptyDistribution(EscortCodeError):
    pass


class InvalidOrder(EscortCodeError):
    pass


class DomainError(EscortCodeError):
    pass


class CardinalityMismatch(EscortCodeError):
    pass


class ZeroProbability(EscortCodeError):
    pass


class KraftViolation(EscortCodeError):
    pass


class NonIntegerLength(EscortCodeError):
    pass


class InstanceTooLarge(EscortCodeError):
    pass


class UnknownSymbol(EscortCodeError):
    pass


class CorruptHeader(EscortCodeError):
    pass


class DanglingBits(EscortCodeError):
    pass


class InvalidCodebook(EscortCodeError):
    pass


class NonPrefixCodebook(InvalidCodebook):
    pass


class InvalidBase(EscortCodeError):
    pass


class InvalidLength(EscortCodeError):
    pass


class ParseError(EscortCodeError):
    """Malformed text input. ``line`` is 1-based, or None if not line specific."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidCodeword(EscortCodeError):
    """Payload digits that do not parse with the embedded codebook."""
