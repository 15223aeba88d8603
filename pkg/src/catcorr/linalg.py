"""Dense complex linear algebra: scalar product, norm, metric, and a
Gaussian-elimination solver with partial pivoting.

The scalar product conjugates its *second* argument,
``(x, y) = sum_i x_i * conj(y_i)``, so it is linear in the first argument
and conjugate-symmetric.  Every derived quantity (norm, distance,
correlation) follows this convention.
"""

from __future__ import annotations

import warnings

import numpy as np

from .exceptions import IllConditionedWarning, NumericalError
from .validation import as_complex_matrix, as_complex_vector, check_equal_length

#: Relative pivot threshold below which a system counts as singular.
SINGULAR_TOL = 1e-12

#: Max/min pivot-modulus ratio beyond which a conditioning warning is issued.
CONDITION_RATIO_LIMIT = 1e12


def scalar_product(x, y) -> complex:
    """Hermitian scalar product sum_i x_i * conj(y_i)."""
    x = as_complex_vector(x, "x")
    y = as_complex_vector(y, "y")
    check_equal_length(x, y)
    return complex(np.sum(x * np.conj(y)))


def norm(x) -> float:
    """Euclidean norm, sqrt of the scalar product of x with itself."""
    x = as_complex_vector(x, "x")
    return float(np.sqrt(np.sum(x.real**2 + x.imag**2)))


def distance(x, y) -> float:
    """Metric induced by the norm: ||y - x||."""
    x = as_complex_vector(x, "x")
    y = as_complex_vector(y, "y")
    check_equal_length(x, y)
    return norm(y - x)


def normal_equations(design, rhs) -> tuple[np.ndarray, np.ndarray]:
    """Left-multiply an overdetermined system by the conjugate transpose.

    For a design matrix X with at least as many rows as columns and a
    right-hand side y, returns the pair (X^H X, X^H y) whose solution is
    the least-squares coefficient vector.  X^H X is Hermitian by
    construction.
    """
    X = as_complex_matrix(design, "design")
    y = as_complex_vector(rhs, "rhs")
    if X.shape[0] != y.shape[0]:
        raise NumericalError(
            f"design has {X.shape[0]} rows but right-hand side has {y.shape[0]} entries"
        )
    if X.shape[0] < X.shape[1]:
        raise NumericalError(
            f"underdetermined system: {X.shape[0]} rows < {X.shape[1]} columns"
        )
    xh = X.conj().T
    return xh @ X, xh @ y


def solve(a, b) -> np.ndarray:
    """Solve the square complex system a @ x = b.

    Gaussian elimination with partial pivoting: at every step the row with
    the largest remaining pivot modulus is swapped up.  Inputs are copied,
    never mutated.

    Raises
    ------
    NumericalError
        If a pivot modulus falls below ``SINGULAR_TOL`` relative to the
        largest entry of the original matrix.

    Warns
    -----
    IllConditionedWarning
        When the ratio of largest to smallest pivot modulus exceeds
        ``CONDITION_RATIO_LIMIT``.
    """
    a = as_complex_matrix(a, "a").copy()
    x = as_complex_vector(b, "b").copy()
    n = a.shape[0]
    if a.shape[1] != n:
        raise NumericalError(f"matrix must be square, got shape {a.shape}")
    if x.shape[0] != n:
        raise NumericalError(f"matrix is {n}x{n} but right-hand side has {x.shape[0]} entries")

    scale = float(np.abs(a).max())
    if scale == 0.0:
        raise NumericalError("singular system: matrix is zero")
    tol = SINGULAR_TOL * scale

    pivots = np.empty(n)
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) <= tol:
            raise NumericalError(
                f"singular system: pivot modulus {abs(a[p, k]):.3e} at step {k} "
                f"below threshold {tol:.3e}"
            )
        if p != k:
            a[[k, p]] = a[[p, k]]
            x[[k, p]] = x[[p, k]]
        pivots[k] = abs(a[k, k])
        factors = a[k + 1:, k] / a[k, k]
        a[k + 1:, k + 1:] -= np.outer(factors, a[k, k + 1:])
        x[k + 1:] -= factors * x[k]

    if pivots.max() / pivots.min() > CONDITION_RATIO_LIMIT:
        warnings.warn(
            f"ill-conditioned system: pivot ratio {pivots.max() / pivots.min():.3e}",
            IllConditionedWarning,
            stacklevel=2,
        )

    for k in range(n - 1, -1, -1):
        x[k] = (x[k] - np.dot(a[k, k + 1:], x[k + 1:])) / a[k, k]
    return x
