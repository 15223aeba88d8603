"""Complex least-squares polynomial models and the phase-invariance experiment.

A :class:`ComplexLeastSquares` estimator fits y ~ b0 + b1*x + ... + bd*x^d
for complex-valued x and y by solving the Hermitian normal equations with
the Gaussian-elimination solver.  The correlation between a variable and
its fitted model depends on the phase assignment used to code x when the
model is linear, but empirically does not when the degree is one less than
the number of distinct classes; :func:`invariance_experiment` measures
exactly that spread.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .coding import NominalCoder, PhaseAssignment, enumerate_assignments, summarize_classes
from .correlation import complex_pearson
from .exceptions import DataError
from .linalg import normal_equations, solve
from .validation import as_complex_vector, check_equal_length


class ComplexLeastSquares(BaseEstimator):
    """Least-squares polynomial model for complex-valued data.

    Minimizes ||y - X b||^2 where X has columns 1, x, ..., x^degree, by
    solving X^H X b = X^H y.

    Parameters
    ----------
    degree : int, default=1
        Degree of the fitted polynomial, at least 1.

    Attributes
    ----------
    coef_ : ndarray of complex, shape (degree + 1,)
        Coefficients b0..bd, constant term first.
    fitted_ : ndarray of complex
        Model values X @ coef_ at the training points.
    residuals_ : ndarray of complex
        y - fitted_; orthogonal to every design column.
    q_ : float
        Squared residual norm, the minimized error measure.
    """

    def __init__(self, degree: int = 1):
        self.degree = degree

    def _design(self, x: np.ndarray) -> np.ndarray:
        return np.vander(x, self.degree + 1, increasing=True)

    def fit(self, x, y):
        if not isinstance(self.degree, (int, np.integer)) or self.degree < 1:
            raise DataError(f"degree must be an integer >= 1, got {self.degree!r}")
        x = as_complex_vector(x, "x")
        y = as_complex_vector(y, "y")
        check_equal_length(x, y)
        if x.shape[0] < 2:
            raise DataError("need at least 2 observations to fit")
        distinct = np.unique(x).shape[0]
        if distinct < self.degree + 1:
            raise DataError(
                f"underdetermined design: x takes {distinct} distinct value(s), "
                f"degree {self.degree} needs at least {self.degree + 1}"
            )
        X = self._design(x)
        lhs, rhs = normal_equations(X, y)
        self.coef_ = solve(lhs, rhs)
        self.fitted_ = X @ self.coef_
        self.residuals_ = y - self.fitted_
        self.q_ = float(np.sum(self.residuals_.real**2 + self.residuals_.imag**2))
        return self

    def predict(self, x) -> np.ndarray:
        if not hasattr(self, "coef_"):
            raise NotFittedError("ComplexLeastSquares must be fitted before predict")
        return self._design(as_complex_vector(x, "x")) @ self.coef_


def model_correlation(y, model: ComplexLeastSquares) -> complex:
    """Correlation between a variable and its fitted model values."""
    if not hasattr(model, "fitted_"):
        raise NotFittedError("model must be fitted first")
    return complex_pearson(y, model.fitted_)


@dataclass(frozen=True)
class InvarianceReport:
    """Model correlations across all phase assignments of one variable.

    Attributes
    ----------
    degree : int
        Polynomial degree of every fitted model.
    assignments : tuple of PhaseAssignment
        Swept assignments, in enumeration order.
    models : tuple of ComplexLeastSquares
        The fitted model per assignment.
    correlations : ndarray of complex
        Correlation between the modeled variable and each model's values.
    spread : float
        Largest pairwise modulus of difference between correlations.
    tolerance : float
        Spread threshold for the invariance verdict.
    invariant : bool
        True when ``spread <= tolerance``.
    """

    degree: int
    assignments: tuple[PhaseAssignment, ...]
    models: tuple[ComplexLeastSquares, ...]
    correlations: np.ndarray = field(repr=False)
    spread: float = 0.0
    tolerance: float = 1e-6
    invariant: bool = True

    def __post_init__(self):
        correlations = np.asarray(self.correlations, dtype=np.complex128).copy()
        correlations.setflags(write=False)
        object.__setattr__(self, "correlations", correlations)


def invariance_experiment(
    v1,
    v2,
    degree: int | None = None,
    coding: str = "rank",
    tolerance: float = 1e-6,
) -> InvarianceReport:
    """Fit a polynomial model of v2 against v1 for every phase assignment
    and measure how much the model correlation moves.

    Parameters
    ----------
    v1 : sequence of str
        Categorical column, coded per assignment (complex when it has
        equal-cardinality classes).
    v2 : sequence of str
        Real-codable categorical column, the modeled variable.
    degree : int, optional
        Polynomial degree; defaults to (number of distinct classes of
        v1) - 1, the largest degree the design supports.
    tolerance : float
        Spread threshold below which the correlation counts as invariant.

    Notes
    -----
    With the default degree the correlation is expected to be invariant;
    with a lower degree (in particular 1) it generally is not, unless the
    sweep is trivial.
    """
    y = NominalCoder(coding=coding, allow_complex=False).fit_transform(v2)
    summaries = summarize_classes(v1)
    if degree is None:
        degree = len(summaries) - 1
    if degree < 1:
        raise DataError(
            f"degree must be >= 1; variable 1 has {len(summaries)} class(es)"
        )
    assignments = enumerate_assignments(summaries)
    models = []
    correlations = np.empty(len(assignments), dtype=np.complex128)
    for k, assignment in enumerate(assignments):
        x = NominalCoder(coding=coding, assignment=assignment).fit_transform(v1)
        model = ComplexLeastSquares(degree=degree).fit(x, y)
        models.append(model)
        correlations[k] = model_correlation(y, model)
    spread = 0.0
    for i in range(len(correlations)):
        for j in range(i + 1, len(correlations)):
            spread = max(spread, float(abs(correlations[i] - correlations[j])))
    return InvarianceReport(
        degree=int(degree),
        assignments=tuple(assignments),
        models=tuple(models),
        correlations=correlations,
        spread=spread,
        tolerance=float(tolerance),
        invariant=bool(spread <= tolerance),
    )
