import math

import numpy as np
import pytest
import scipy.integrate
import scipy.special

from catcorr import NumericalError, regularized_gamma_q


def _chi_square_density(x: float, df: int) -> float:
    half = df / 2.0
    return x ** (half - 1.0) * math.exp(-x / 2.0) / (2.0**half * math.gamma(half))


@pytest.mark.parametrize("df", [1, 2, 3, 5, 10, 30])
@pytest.mark.parametrize("stat", [0.01, 0.5333333333333333, 2.475, 4.95, 12.0, 40.0])
def test_matches_quadrature_of_chi_square_density(df, stat):
    # independent oracle: integrate the density from the statistic up to a
    # cutoff beyond which the tail is far below the comparison tolerance
    cutoff = stat + 400.0
    expected, err = scipy.integrate.quad(
        _chi_square_density,
        stat,
        cutoff,
        args=(df,),
        limit=500,
        epsabs=1e-13,
        epsrel=1e-13,
    )
    assert err < 1e-10
    assert regularized_gamma_q(df / 2.0, stat / 2.0) == pytest.approx(
        expected, abs=1e-10
    )


def test_matches_scipy_gammaincc_on_grid():
    for a in [0.25, 0.5, 1.0, 1.5, 2.0, 7.5, 25.0, 120.0]:
        for x in [0.0, 1e-6, 0.1, 0.9, 1.0, 2.3, 10.0, 80.0, 400.0]:
            assert regularized_gamma_q(a, x) == pytest.approx(
                float(scipy.special.gammaincc(a, x)), abs=1e-12
            )


def test_boundary_values():
    assert regularized_gamma_q(3.0, 0.0) == 1.0
    assert regularized_gamma_q(1.0, 700.0) == pytest.approx(0.0, abs=1e-250)


def test_invalid_arguments():
    with pytest.raises(NumericalError):
        regularized_gamma_q(0.0, 1.0)
    with pytest.raises(NumericalError):
        regularized_gamma_q(-1.0, 1.0)
    with pytest.raises(NumericalError):
        regularized_gamma_q(1.0, -0.5)
