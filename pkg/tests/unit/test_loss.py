import math

import numpy as np
import pytest

from beds_lab.dynamics.state import BedsState
from beds_lab.regularizers.loss import (
    DEGENERATE_PENALTY,
    BedsGradient,
    BedsTarget,
    beds_loss,
    beds_loss_gradient,
    total_loss,
)
from beds_lab.utils.errors import DegenerateCoherence, DimensionError, DomainError


def test_loss_at_target_is_data_only():
    """θ = θ* leaves only λ·data."""
    s = BedsState.from_arrays([1.0, 2.0], [3.0, 4.0], 0.5, 2.0)
    target = BedsTarget(s)
    b = beds_loss(s, target, lam=0.7, data_loss=2.0)
    assert (b.spatial_mu, b.spatial_tau, b.temporal_phi, b.temporal_kappa) == (0.0, 0.0, 0.0, 0.0)
    assert b.total == pytest.approx(1.4)
    assert b.as_dict()["lambda"] == 0.7


def test_loss_examples():
    """Δμ=1 at τ=4 gives 4; a π phase slip at κ=2 gives 4."""
    b = beds_loss(BedsState.scalar(1.0, 4.0), BedsTarget.scalar(0.0, 4.0), lam=1.0)
    assert b.spatial_mu == 4.0
    assert b.spatial_tau == b.temporal_phi == b.temporal_kappa == 0.0
    b = beds_loss(BedsState.scalar(0.0, 1.0, math.pi, 2.0), BedsTarget.scalar(0.0, 1.0, 0.0, 2.0), lam=1.0)
    assert b.temporal_phi == pytest.approx(4.0)


def test_gradient_examples():
    """∂/∂μ = 2τΔμ = 8; μ and φ components vanish at the target."""
    g = beds_loss_gradient(BedsState.scalar(1.0, 4.0), BedsTarget.scalar(0.0, 4.0), lam=1.0)
    assert g.mu[0] == 8.0
    s = BedsState.scalar(0.3, 2.0, 1.0, 3.0)
    g = beds_loss_gradient(s, BedsTarget(s), lam=1.0)
    assert g.mu[0] == 0.0
    assert g.phi == 0.0
    assert np.allclose(g.as_vector(), 0.0, atol=1e-15)


def _loss_from_vector(v, dim, target, lam):
    s = BedsState.from_arrays(v[:dim], v[dim:2 * dim], v[-2], v[-1])
    return total_loss(s, target, lam)


def test_gradient_matches_finite_differences(rng):
    """Analytic gradient vs central differences (h = 1e-6), 100 random points."""
    h = 1e-6
    for _ in range(100):
        dim = int(rng.integers(1, 4))
        x = np.concatenate([rng.normal(0, 1, dim), rng.uniform(0.5, 3.0, dim), [rng.uniform(0.5, 5.5), rng.uniform(0.5, 3.0)]])
        star = BedsState.from_arrays(rng.normal(0, 1, dim), rng.uniform(0.5, 3.0, dim), rng.uniform(0.5, 5.5), rng.uniform(0.5, 3.0))
        target = BedsTarget(star)
        lam = 1.0
        s = BedsState.from_arrays(x[:dim], x[dim:2 * dim], x[-2], x[-1])
        analytic = beds_loss_gradient(s, target, lam).as_vector()
        numeric = np.empty_like(x)
        for k in range(len(x)):
            e = np.zeros_like(x)
            e[k] = h
            numeric[k] = (_loss_from_vector(x + e, dim, target, lam) - _loss_from_vector(x - e, dim, target, lam)) / (2 * h)
        np.testing.assert_allclose(analytic, numeric, rtol=1e-5, atol=1e-7)


def test_data_gradient_is_scaled_by_lambda():
    """The data term enters the gradient as λ·∇data."""
    s = BedsState.scalar(0.0, 1.0)
    target = BedsTarget(s)
    g = beds_loss_gradient(s, target, lam=2.0, data_grad=BedsGradient(np.array([1.0]), np.array([0.5]), 0.25, 0.0))
    np.testing.assert_allclose(g.as_vector(), [2.0, 1.0, 0.5, 0.0])


def test_degenerate_coherence():
    """κ = 0 is refused in strict mode and penalised otherwise."""
    s = BedsState.scalar(0.0, 1.0, 0.0, 0.0)
    target = BedsTarget.scalar(0.0, 1.0, 0.0, 1.0)
    with pytest.raises(DegenerateCoherence, match="singular"):
        beds_loss(s, target, lam=1.0)
    with pytest.raises(DegenerateCoherence, match="singular"):
        beds_loss_gradient(s, target, lam=1.0)
    assert beds_loss(s, target, lam=1.0, strict=False).temporal_kappa == DEGENERATE_PENALTY
    both_uniform = beds_loss(s, BedsTarget.scalar(0.0, 1.0, 0.0, 0.0), lam=1.0, strict=False)
    assert both_uniform.temporal_kappa == 0.0


def test_invalid_lambda_and_dimensions():
    """λ must be positive and the target must match the state's dimension."""
    s = BedsState.scalar(0.0, 1.0)
    with pytest.raises(DomainError, match="lambda must be positive"):
        beds_loss(s, BedsTarget(s), lam=0.0)
    with pytest.raises(DimensionError, match="target has 2"):
        beds_loss(s, BedsTarget(BedsState.from_arrays([0, 0], [1, 1], 0, 1)), lam=1.0)


def test_loss_is_positive_off_the_diagonal(rng):
    """1000 random pairs, each also with a single perturbed coordinate: the loss is > 0 unless θ = θ*."""
    for _ in range(1000):
        dim = int(rng.integers(1, 4))
        star = BedsState.from_arrays(rng.normal(0, 1, dim), rng.uniform(0.1, 5.0, dim), rng.uniform(-3.0, 3.0), rng.uniform(0.1, 5.0))
        other = BedsState.from_arrays(rng.normal(0, 1, dim), rng.uniform(0.1, 5.0, dim), rng.uniform(-3.0, 3.0), rng.uniform(0.1, 5.0))
        target = BedsTarget(star)
        assert beds_loss(star, target, lam=1.0).total == 0.0
        assert beds_loss(other, target, lam=1.0).total > 0.0

        x = np.concatenate([star.mus, star.taus, [star.temporal.phi, star.temporal.kappa]])
        k = int(rng.integers(0, len(x)))
        x[k] += rng.uniform(0.05, 1.0)
        moved = BedsState.from_arrays(x[:dim], x[dim:2 * dim], x[-2], x[-1])
        assert beds_loss(moved, target, lam=1.0).total > 0.0


@pytest.mark.parametrize("c", [0.25, 4.0, 10.0])
def test_rescaled_data_with_inverse_lambda_gives_the_same_loss(c, rng):
    """λ·data is unchanged when data is scaled by c and λ by 1/c."""
    for _ in range(50):
        s = BedsState.from_arrays(rng.normal(0, 1, 2), rng.uniform(0.5, 3.0, 2), rng.uniform(-3.0, 3.0), rng.uniform(0.5, 3.0))
        target = BedsTarget(BedsState.from_arrays([0.0, 0.0], [1.0, 1.0], 0.0, 1.0))
        data = float(rng.uniform(0.0, 10.0))
        assert total_loss(s, target, 1.0 / c, c * data) == pytest.approx(total_loss(s, target, 1.0, data), rel=1e-12)
