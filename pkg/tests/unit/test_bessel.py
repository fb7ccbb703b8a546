import numpy as np
import pytest
from scipy.special import i0e, i1e, iv

from beds_lab.geometry.bessel import (
    bessel_i0e,
    bessel_i1e,
    bessel_ratio,
    bessel_ratio_over_kappa,
    ratio_derivatives,
)
from beds_lab.utils.errors import DomainError

GRID = np.concatenate([np.linspace(0.0, 30.0, 3001), np.geomspace(30.0, 1e4, 500)])


def test_scaled_bessel_matches_scipy():
    """In-house e^{-κ}I₀ and e^{-κ}I₁ agree with scipy to 1e-10 relative."""
    np.testing.assert_allclose(bessel_i0e(GRID), i0e(GRID), rtol=1e-10)
    np.testing.assert_allclose(bessel_i1e(GRID[1:]), i1e(GRID[1:]), rtol=1e-10)
    assert bessel_i1e(0.0) == 0.0


def test_ratio_reference_values():
    """A(0) = 0, A(0.1) from the series, A(100) from the asymptotic expansion."""
    assert bessel_ratio(0.0) == 0.0
    assert bessel_ratio(0.1) == pytest.approx(0.049938, abs=1e-6)
    assert bessel_ratio(100.0) == pytest.approx(1.0 - 1.0 / 200.0 - 1.0 / (8.0 * 100.0 ** 2), abs=1e-6)
    assert bessel_ratio(2.0) == pytest.approx(iv(1, 2.0) / iv(0, 2.0), rel=1e-12)


def test_ratio_monotone_and_bounded():
    """A increases strictly on a 10⁴-point grid and stays below 1."""
    k = np.linspace(0.0, 200.0, 10_000)
    a = bessel_ratio(k)
    assert np.all(np.diff(a) > 0.0)
    assert np.all(a < 1.0)


def test_ratio_over_kappa_limit():
    """r(κ) = A(κ)/κ → ½ at zero."""
    assert bessel_ratio_over_kappa(0.0) == 0.5
    assert bessel_ratio_over_kappa(1e-6) == pytest.approx(0.5, rel=1e-9)


def test_ratio_derivative_matches_finite_difference():
    """A' = 1 - A/κ - A² against a central difference."""
    k = np.array([0.5, 1.0, 5.0, 14.9, 15.1, 40.0])
    h = 1e-6
    _, _, da, dr = ratio_derivatives(k)
    np.testing.assert_allclose(da, (bessel_ratio(k + h) - bessel_ratio(k - h)) / (2 * h), rtol=1e-6)
    fd_r = (bessel_ratio_over_kappa(k + h) - bessel_ratio_over_kappa(k - h)) / (2 * h)
    np.testing.assert_allclose(dr, fd_r, rtol=1e-5)


def test_negative_kappa_rejected():
    """κ < 0 is outside the domain."""
    with pytest.raises(DomainError, match="kappa must be finite"):
        bessel_ratio(-1.0)
