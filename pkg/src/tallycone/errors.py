"""Exception hierarchy shared by all tallycone modules."""


class TallyconeError(Exception):
    """Base class for every error raised by this package."""


class SheetError(TallyconeError, ValueError):
    pass


class NonzeroDiagonal(SheetError):
    pass


class NegativeEntry(SheetError):
    pass


class BadDimension(SheetError):
    pass


class DimensionMismatch(SheetError):
    pass


class BadPermutation(SheetError):
    pass


class NotOrdered(SheetError):
    pass


class ContainsZero(TallyconeError, ValueError):
    pass


class TooLarge(TallyconeError, ValueError):
    """Raised by brute-force oracles when the requested size would blow up."""


class PeriodTooSmall(TallyconeError):
    """A quasipolynomial fit with the assumed period failed validation."""


class SingularSystem(TallyconeError, ArithmeticError):
    pass


class NonTerminating(TallyconeError):
    """Series numerator did not terminate: bad denominator or too few counts."""


class DimensionTooLarge(TallyconeError, ValueError):
    pass


class DegenerateSimplex(TallyconeError, ValueError):
    pass


class BudgetExceeded(TallyconeError, RuntimeError):
    pass
