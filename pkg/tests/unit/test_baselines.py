import math

import numpy as np
import pytest

from beds_lab.geometry.beliefs import GaussianBelief
from beds_lab.regularizers.baselines import (
    euclidean_fisher_ratio,
    ridge_loss,
    sigreg_gradient,
    sigreg_loss,
    sigreg_proxy,
)
from beds_lab.utils.errors import DomainError, InsufficientData


def test_ridge_loss():
    """‖θ - θ*‖² + λ·data."""
    assert ridge_loss([1.0, 2.0], [1.0, 2.0], lam=0.5, data_loss=3.0) == 1.5
    assert ridge_loss([1.0, 1.0], [0.0, 0.0], lam=0.0) == 2.0
    with pytest.raises(DomainError, match="lambda must be >= 0"):
        ridge_loss([0.0], [0.0], lam=-1.0)


@pytest.mark.parametrize("tau", [0.01, 1.0, 100.0])
def test_euclidean_to_fisher_ratio_is_variance(tau):
    """d_Euclid²/d_F² → 1/τ for a small μ step."""
    assert euclidean_fisher_ratio(GaussianBelief(0.3, tau), d_mu=1e-4) == pytest.approx(1.0 / tau, rel=1e-6)


def test_sigreg_loss():
    """0 at σ = 1; -1 + (e - 1)² at σ = e; unbounded at both ends."""
    assert sigreg_loss([1.0, 1.0, 1.0], 1.0) == 0.0
    assert sigreg_loss([math.e], 1.0) == pytest.approx(-1.0 + (math.e - 1.0) ** 2, rel=1e-12)
    assert sigreg_loss([1e-12], 1.0) > 20.0
    assert sigreg_loss([1e6], 1.0) > 1e11
    with pytest.raises(DomainError, match="sigmas must be positive"):
        sigreg_loss([0.0], 1.0)


@pytest.mark.parametrize("alpha", [0.1, 0.7, 1.0, 25.0])
def test_sigreg_minimum_sits_above_one(alpha):
    """The log term tilts the minimum to σ* = (1 + √(1 + 2/α))/2, strictly above 1."""
    s_star = 0.5 * (1.0 + math.sqrt(1.0 + 2.0 / alpha))
    assert s_star > 1.0
    assert sigreg_gradient([s_star], alpha)[0] == pytest.approx(0.0, abs=1e-12)
    assert sigreg_loss([s_star], alpha) < sigreg_loss([1.0], alpha)
    for s in np.linspace(0.2, 4.0, 77):
        assert sigreg_loss([s], alpha) >= sigreg_loss([s_star], alpha) - 1e-12


def test_sigreg_gradient_matches_finite_difference():
    """-1/σ + 2α(σ - 1)."""
    s = np.array([0.5, 1.3, 2.0])
    h = 1e-6
    fd = [(sigreg_loss(s + h * e, 0.7) - sigreg_loss(s - h * e, 0.7)) / (2 * h) for e in np.eye(3)]
    np.testing.assert_allclose(sigreg_gradient(s, 0.7), fd, rtol=1e-6)


def test_sigreg_proxy(rng):
    """Whitened embeddings score 0; identical rows score k + ‖v‖²; scaling follows the covariance oracle."""
    z = rng.normal(size=(200, 3))
    z = z - z.mean(axis=0)
    chol = np.linalg.cholesky(np.cov(z, rowvar=False, ddof=1))
    white = z @ np.linalg.inv(chol).T
    assert sigreg_proxy(white) == pytest.approx(0.0, abs=1e-12)

    v = np.array([1.0, -2.0, 0.5])
    assert sigreg_proxy(np.tile(v, (10, 1))) == pytest.approx(3 + v @ v, rel=1e-12)

    cov = np.cov(z, rowvar=False, ddof=1)
    expected = np.sum((4.0 * cov - np.eye(3)) ** 2)
    assert sigreg_proxy(2.0 * z) == pytest.approx(expected, rel=1e-10)


def test_sigreg_proxy_needs_two_rows():
    """A single embedding has no sample covariance."""
    with pytest.raises(InsufficientData, match="at least 2"):
        sigreg_proxy(np.ones((1, 3)))
