"""Exception hierarchy for mlsemigroup.

All package errors derive from :class:`MLSemigroupError`, so callers (and the
CLI) can distinguish expected numerical/domain failures from bugs.
"""


class MLSemigroupError(Exception):
    """Base class for all mlsemigroup errors."""


class DomainError(MLSemigroupError, ValueError):
    """An argument lies outside the mathematical or configured domain."""


class GammaOverflowError(DomainError, OverflowError):
    """Gamma argument beyond the representable range (x > 171.6)."""


class ConvergenceError(MLSemigroupError, ArithmeticError):
    """An iterative computation failed to reach its certified target."""


class GridCellError(ConvergenceError):
    """A sweep cell failed to evaluate; carries the cell location."""

    def __init__(self, message: str, row: int, col: int, t: float, s: float):
        super().__init__(message)
        self.row = row
        self.col = col
        self.t = t
        self.s = s


class InconclusiveError(MLSemigroupError):
    """Classification landed between the HOLDS and FAILS bands.

    Signals a grid or tolerance misconfiguration rather than a verdict.
    """

    def __init__(self, message: str, sup_abs: float, tol: float, threshold: float):
        super().__init__(message)
        self.sup_abs = sup_abs
        self.tol = tol
        self.threshold = threshold
