"""Exception types raised by the moonfill engine."""


class MoonError(ValueError):
    """Base class for every error raised on bad input."""


class EmptyShape(MoonError):
    pass


class NotComparable(MoonError):
    def __init__(self, i, i2):
        super().__init__(f"rows {i} and {i2} are not comparable (neither interval contains the other)")
        self.rows = (i, i2)


class NotColumnConvex(MoonError):
    def __init__(self, j):
        super().__init__(f"column {j} is not a contiguous run of rows")
        self.column = j


class MissingColumn(MoonError):
    def __init__(self, j):
        super().__init__(f"column {j} is not covered by any row")
        self.column = j


class IndexOutOfRange(MoonError, IndexError):
    pass


class InfeasibleSums(MoonError):
    pass


class CellOutsideShape(MoonError):
    pass


class MalformedComposition(MoonError):
    pass


class NoPivotFound(MoonError):
    pass


class NotARectangle(MoonError):
    pass


class ShapeMismatch(MoonError):
    pass


class LetterOutOfRange(MoonError):
    pass


class InvalidEndpointSets(MoonError):
    pass


class InexactDivision(ArithmeticError):
    """Raised when a polynomial quotient is not exact. Always an internal bug."""


class FormatError(MoonError):
    """Input text that does not follow the expected format."""
