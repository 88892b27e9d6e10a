"""Exception hierarchy shared by every module."""


class SplitmeetError(Exception):
    """Base class for all library errors."""


class ParseError(SplitmeetError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyPremiseError(ParseError):
    """An implication with an empty premise (the base would not be standard)."""


class ElementOutOfGround(SplitmeetError):
    pass


class GroundMismatch(SplitmeetError):
    pass


class GroundOverlap(SplitmeetError):
    pass


class NotASplit(SplitmeetError):
    """A unit implication whose premise meets both sides of a bipartition."""

    def __init__(self, implication, message=None):
        self.implication = implication
        super().__init__(message or f"premise straddles the bipartition: {implication}")


class BadBipartition(SplitmeetError):
    pass


class NotClosed(SplitmeetError):
    pass


class BudgetExceeded(SplitmeetError):
    pass


class InconsistentInput(SplitmeetError):
    pass


class GeneratorError(SplitmeetError):
    pass
