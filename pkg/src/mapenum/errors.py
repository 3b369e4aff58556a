"""Exception hierarchy shared by every module of the package."""


class MapEnumError(Exception):
    """Base class for all package errors."""


class ExactnessError(MapEnumError, ArithmeticError):
    """An exact division failed.

    Every division performed by the table builders is known to be exact, so
    this always signals a bug (a mistranscribed recurrence or quotient
    formula), never bad input.
    """

    def __init__(self, what, divisor, where):
        self.divisor = divisor
        self.where = tuple(where)
        super().__init__(f"{what} not divisible by {divisor} at {self.where}")


class TableResourceError(MapEnumError, MemoryError):
    """The requested table does not fit in memory."""


class TableTooSmallError(MapEnumError, ValueError):
    """A table does not cover the indices an operation needs."""


class CoverageError(TableTooSmallError):
    """A fixture record lies outside the table it is checked against."""


class FixtureParseError(MapEnumError, ValueError):
    """A CSV or JSON record stream is malformed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
