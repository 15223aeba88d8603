"""Complex-valued linear correlation and phase-permutation sweeps.

The correlation of two coded variables is the cosine of the angle between
their centered vectors.  For real inputs this is the classical coefficient;
for complex inputs the scalar product conjugates the second argument, so
``complex_pearson(y, x) == conj(complex_pearson(x, y))``.

A complex-coded variable does not have one correlation coefficient: each
phase assignment of its equal-cardinality groups produces its own.
:func:`sweep_correlation` evaluates every assignment and collects the
results; the mean of the sweep (its symmetry center) always lies on the
real axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coding import NominalCoder, PhaseAssignment, enumerate_assignments, summarize_classes
from .exceptions import NumericalError
from .linalg import norm, scalar_product
from .validation import as_complex_vector, check_equal_length

_ZERO_VARIANCE_RTOL = 1e-12


def complex_pearson(x, y) -> complex:
    """Linear correlation coefficient of two numeric vectors.

    Subtracts the (complex) mean of each vector and returns
    ``(x_c, y_c) / (||x_c|| * ||y_c||)`` with the second argument
    conjugated in the scalar product.  Swapping the arguments therefore
    conjugates the result.  For vectors with zero imaginary part this
    equals the classical correlation coefficient, and the modulus is
    bounded by 1 either way.

    Raises
    ------
    NumericalError
        If either vector is constant, making the quotient undefined.
    """
    x = as_complex_vector(x, "x")
    y = as_complex_vector(y, "y")
    check_equal_length(x, y)
    if x.shape[0] < 2:
        raise NumericalError("correlation needs at least 2 observations")
    xc = x - x.mean()
    yc = y - y.mean()
    nx, ny = norm(xc), norm(yc)
    if nx <= _ZERO_VARIANCE_RTOL * max(norm(x), 1e-300):
        raise NumericalError("undefined correlation: first variable has zero variance")
    if ny <= _ZERO_VARIANCE_RTOL * max(norm(y), 1e-300):
        raise NumericalError("undefined correlation: second variable has zero variance")
    return scalar_product(xc, yc) / (nx * ny)


@dataclass(frozen=True)
class CorrelationSweep:
    """Correlation coefficients across all phase assignments.

    Attributes
    ----------
    assignments : tuple of PhaseAssignment
        The swept assignments, in enumeration order.
    coefficients : ndarray of complex
        One correlation coefficient per assignment, same order.
    """

    assignments: tuple[PhaseAssignment, ...]
    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients, dtype=np.complex128).copy()
        if coeffs.ndim != 1 or coeffs.shape[0] != len(self.assignments):
            raise NumericalError(
                f"{coeffs.shape[0]} coefficients for {len(self.assignments)} assignments"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self) -> int:
        return len(self.assignments)

    @property
    def center(self) -> complex:
        """Arithmetic mean of the coefficients, the sweep's symmetry center."""
        return complex(self.coefficients.mean())

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.coefficients)


def sweep_correlation(v1, v2, coding: str = "rank") -> CorrelationSweep:
    """Correlate a categorical variable against a real-codable one, for
    every phase assignment of the first.

    Parameters
    ----------
    v1 : sequence of str
        Column whose equal-cardinality classes (if any) are swept over all
        phase assignments.  Without such classes the sweep has exactly one
        (real) coefficient.
    v2 : sequence of str
        Column that must be codable with real numbers, i.e. must not
        contain equal-cardinality classes.
    coding : {"rank", "cardinality"}
        Modulus convention passed to the coder.

    Raises
    ------
    DataError
        If ``v2`` contains equal-cardinality classes.
    NumericalError
        If either coded column is constant.
    """
    y = NominalCoder(coding=coding, allow_complex=False).fit_transform(v2)
    summaries = summarize_classes(v1)
    assignments = enumerate_assignments(summaries)
    coefficients = np.empty(len(assignments), dtype=np.complex128)
    for k, assignment in enumerate(assignments):
        x = NominalCoder(coding=coding, assignment=assignment).fit_transform(v1)
        coefficients[k] = complex_pearson(x, y)
    return CorrelationSweep(assignments=tuple(assignments), coefficients=coefficients)
