"""Mittag-Leffler evaluation and semigroup-defect analysis.

The trajectory t -> E_alpha(lambda t^alpha) solves the order-alpha Caputo
initial value problem u' = lambda u, but unlike the exponential it obeys the
product law E_alpha(lambda (t+s)^alpha) = E_alpha(lambda t^alpha) *
E_alpha(lambda s^alpha) only in the degenerate cases alpha = 1 or
lambda = 0.  This package evaluates the functions with certified error
bounds and quantifies the defect in the scalar and diagonalizable-matrix
settings.
"""

__version__ = "0.1.0"

from mlsemigroup.backend import backend_name
from mlsemigroup.calculus import (
    ResidualReport,
    caputo_l1_residual,
    finite_difference_check,
    ml_derivative,
)
from mlsemigroup.core import (
    DEFAULT_CONFIG,
    EvalResult,
    MLParams,
    SeriesConfig,
    gamma,
    ml_at_time,
    ml_e,
    ml_e2,
)
from mlsemigroup.errors import (
    ConvergenceError,
    DomainError,
    GammaOverflowError,
    GridCellError,
    InconclusiveError,
    MLSemigroupError,
)
from mlsemigroup.matrixfn import Spectrum, eig_symmetric, matrix_defect, ml_matrix
from mlsemigroup.semigroup import (
    DefectGrid,
    ExponentialFit,
    Verdict,
    classify_semigroup,
    default_grid,
    defect,
    defect_grid,
    exponential_fit,
    extend_multiplicative,
    proof_trace_lambda,
)

__all__ = [
    "__version__",
    "backend_name",
    "ConvergenceError",
    "DomainError",
    "GammaOverflowError",
    "GridCellError",
    "InconclusiveError",
    "MLSemigroupError",
    "DEFAULT_CONFIG",
    "EvalResult",
    "MLParams",
    "SeriesConfig",
    "gamma",
    "ml_at_time",
    "ml_e",
    "ml_e2",
    "ResidualReport",
    "caputo_l1_residual",
    "finite_difference_check",
    "ml_derivative",
    "Spectrum",
    "eig_symmetric",
    "matrix_defect",
    "ml_matrix",
    "DefectGrid",
    "ExponentialFit",
    "Verdict",
    "classify_semigroup",
    "default_grid",
    "defect",
    "defect_grid",
    "exponential_fit",
    "extend_multiplicative",
    "proof_trace_lambda",
]
