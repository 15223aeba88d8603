"""Regularized incomplete gamma function.

Only the upper tail Q(a, x) is needed here: the survival function of the
chi-square distribution with ``df`` degrees of freedom evaluated at ``x``
is ``Q(df / 2, x / 2)``.
"""

from __future__ import annotations

import math

from .exceptions import NumericalError

_EPS = 1e-15
_MAX_ITER = 500


def regularized_gamma_q(a: float, x: float) -> float:
    """Upper regularized incomplete gamma function Q(a, x).

    Q(a, x) = Gamma(a, x) / Gamma(a), with Q(a, 0) = 1 and Q(a, inf) = 0.
    Evaluated by the classical pair of expansions: a power series for the
    lower function P(a, x) when ``x < a + 1`` and a continued fraction
    (modified Lentz) for Q(a, x) otherwise.  Both converge to roughly
    machine precision; absolute error is well below 1e-10 over the range
    used for chi-square tails.

    Parameters
    ----------
    a : float
        Shape parameter, must be positive.
    x : float
        Evaluation point, must be non-negative.
    """
    if a <= 0:
        raise NumericalError(f"gamma shape parameter must be positive, got {a}")
    if x < 0:
        raise NumericalError(f"gamma evaluation point must be >= 0, got {x}")
    if x == 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _lower_series(a, x)
    return _upper_continued_fraction(a, x)


def _lower_series(a: float, x: float) -> float:
    """P(a, x) by series: x^a e^-x / Gamma(a) * sum x^n / (a)_{n+1}."""
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            return total * math.exp(-x + a * math.log(x) - math.lgamma(a))
    raise NumericalError(f"gamma series did not converge for a={a}, x={x}")


def _upper_continued_fraction(a: float, x: float) -> float:
    """Q(a, x) by continued fraction, evaluated with modified Lentz."""
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b if b != 0.0 else 1.0 / tiny
    h = d
    for i in range(1, _MAX_ITER + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h * math.exp(-x + a * math.log(x) - math.lgamma(a))
    raise NumericalError(f"gamma continued fraction did not converge for a={a}, x={x}")
