"""Exception hierarchy.

Every error raised by the library derives from :class:`DesignError`, which is a
``ValueError`` so callers that only care about "bad input" can catch that.
Verification failures are *not* exceptions; they come back as
:class:`~quasisudoku.report.VerificationReport` objects.
"""


class DesignError(ValueError):
    """Base class for all library errors."""


# Latin squares / MOLS


class NotSquare(DesignError):
    pass


class SymbolOutOfRange(DesignError):
    def __init__(self, cell, symbol, order):
        self.cell = cell
        self.symbol = symbol
        super().__init__(f"symbol {symbol!r} at cell {cell} is outside [0, {order})")


class RepeatInRow(DesignError):
    def __init__(self, row, symbol):
        self.row = row
        self.symbol = symbol
        super().__init__(f"symbol {symbol} repeated in row {row}")


class RepeatInColumn(DesignError):
    def __init__(self, col, symbol):
        self.col = col
        self.symbol = symbol
        super().__init__(f"symbol {symbol} repeated in column {col}")


class OrderMismatch(DesignError):
    pass


class NotPrime(DesignError):
    pass


class NotPrimePower(DesignError):
    pass


class OrderTooSmall(DesignError):
    pass


class UnsupportedOrder(DesignError):
    pass


class UnknownFixture(DesignError):
    pass


# Products, projections, arrays


class LabelMismatch(DesignError):
    pass


class NotOrthogonal(DesignError):
    pass


class SpecViolation(DesignError):
    pass


class MalformedArray(DesignError):
    pass


# Space-filling designs


class UnevenClasses(DesignError):
    pass


class CountMismatch(DesignError):
    pass


class IndivisibleGrid(DesignError):
    pass


# I/O


class ParseError(DesignError):
    pass


class KindMismatch(DesignError):
    pass


class ColumnOutOfRange(DesignError):
    pass


class SliceOutOfRange(DesignError):
    pass
