"""Exception types raised by the library."""


class QMatroidError(ValueError):
    """Base class for domain errors (bad parameters, invalid inputs)."""


class InvalidCharacteristic(QMatroidError):
    pass


class FieldDivisionByZero(QMatroidError, ZeroDivisionError):
    pass


class ShapeError(QMatroidError):
    """Dimension or ambient-space mismatch."""


class InvalidCollection(QMatroidError):
    """A collection of subspaces violates the paving hypothesis.

    ``pair`` holds the offending pair of subspaces when one exists.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InvalidRankTable(QMatroidError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SizeLimitError(QMatroidError):
    """Refusal to materialize something beyond a documented ceiling."""
