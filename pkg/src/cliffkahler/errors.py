"""Exception hierarchy shared by every module of the package."""


class CliffordError(Exception):
    """Base class for all domain errors raised by cliffkahler."""


class SignatureMismatch(CliffordError, ValueError):
    pass


class NotInSubalgebra(CliffordError, ValueError):
    pass


class InvalidPlacement(CliffordError, ValueError):
    pass


class InvalidGeneratorSet(CliffordError, ValueError):
    pass


class UnsupportedSignature(CliffordError, ValueError):
    pass


class NotAKahlerIdempotent(CliffordError, ValueError):
    pass


class DimensionMismatch(CliffordError, ValueError):
    pass


class SearchExhausted(CliffordError):
    """The backtracking generator search could not reach the requested size.

    ``found`` holds the largest valid generator set seen during the search.
    """

    def __init__(self, message, found=()):
        super().__init__(message)
        self.found = tuple(found)


class ParseError(CliffordError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
