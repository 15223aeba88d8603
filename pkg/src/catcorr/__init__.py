"""catcorr: numeric coding of categorical variables and complex-valued
correlation analysis.

Categorical columns are coded as numbers whose modulus carries class
cardinality (tied ranks); classes of equal cardinality share a modulus and
are separated by roots-of-unity phases.  On top of the coding the package
provides the chi-square association test, real and complex correlation
coefficients, sweeps over all phase permutations, complex least-squares
polynomial models, and a tie-breaking data correction.
"""

from .coding import (
    TIE_BREAK_POLICY,
    ClassSummary,
    NominalCoder,
    PhaseAssignment,
    TieBreakResult,
    break_ties,
    enumerate_assignments,
    heap_permutations,
    identity_assignment,
    summarize_classes,
)
from .contingency import (
    ChiSquareResult,
    ContingencyTable,
    chi_square_survival,
    chi_square_test,
    crosstab,
    expected_frequencies,
)
from .correlation import CorrelationSweep, complex_pearson, sweep_correlation
from .exceptions import (
    CatcorrError,
    DataError,
    IllConditionedWarning,
    LowExpectedFrequencyWarning,
    NumericalError,
)
from .linalg import distance, norm, normal_equations, scalar_product, solve
from .regression import (
    ComplexLeastSquares,
    InvarianceReport,
    invariance_experiment,
    model_correlation,
)
from .special import regularized_gamma_q

__version__ = "0.1.0"

__all__ = [
    "CatcorrError",
    "ChiSquareResult",
    "ClassSummary",
    "ComplexLeastSquares",
    "ContingencyTable",
    "CorrelationSweep",
    "DataError",
    "IllConditionedWarning",
    "InvarianceReport",
    "LowExpectedFrequencyWarning",
    "NominalCoder",
    "NumericalError",
    "PhaseAssignment",
    "TIE_BREAK_POLICY",
    "TieBreakResult",
    "break_ties",
    "chi_square_survival",
    "chi_square_test",
    "complex_pearson",
    "crosstab",
    "distance",
    "enumerate_assignments",
    "expected_frequencies",
    "heap_permutations",
    "identity_assignment",
    "invariance_experiment",
    "model_correlation",
    "norm",
    "normal_equations",
    "regularized_gamma_q",
    "scalar_product",
    "solve",
    "summarize_classes",
    "sweep_correlation",
]
