"""Fisher–Rao geometry of the univariate Gaussian family.

In (μ, σ) coordinates the metric is (dμ² + 2dσ²)/σ², i.e. twice the Poincaré
metric of the half-plane with x = μ/√2, y = σ. Distances use the closed-form
half-plane arccosh; geodesics are traced in the hyperboloid model where they
are linear combinations of the endpoints.
"""
import math
from typing import Sequence

import numpy as np

from ..utils.logger import get_logger
from .beliefs import GaussianBelief, MetricTensor2

logger = get_logger("geometry.fisher_rao")

SQRT2 = math.sqrt(2.0)


def gaussian_metric(b: GaussianBelief) -> MetricTensor2:
    """Metric in (μ, τ) coordinates: g_μμ = τ, g_ττ = 1/(2τ²)."""
    return MetricTensor2(b.tau, 0.5 / (b.tau * b.tau))


def gaussian_metric_log(b: GaussianBelief) -> MetricTensor2:
    """Pullback metric in (μ, ln τ) coordinates: g_μμ = τ, g_ℓℓ = ½."""
    return MetricTensor2(b.tau, 0.5)


def _half_plane_distance(a: GaussianBelief, b: GaussianBelief) -> float:
    """Distance for the unit-curvature half-plane (d_F / √2)."""
    if a.mu == b.mu:
        return 0.5 * abs(math.log(b.tau / a.tau))
    sa, sb = a.sigma(), b.sigma()
    dmu = a.mu - b.mu
    ds = sa - sb
    x = (0.5 * dmu * dmu + ds * ds) / (2.0 * sa * sb)
    # arccosh(1 + x) = 2·asinh(√(x/2)) keeps precision for small x
    return 2.0 * math.asinh(math.sqrt(0.5 * x))


def gaussian_fr_distance(a: GaussianBelief, b: GaussianBelief) -> float:
    return SQRT2 * _half_plane_distance(a, b)


def gaussian_fr_distance_log(a: GaussianBelief, b: GaussianBelief) -> float:
    """Same distance evaluated from (μ, ℓ = ln τ) coordinates."""
    la, lb = math.log(a.tau), math.log(b.tau)
    dmu = a.mu - b.mu
    x = 0.25 * dmu * dmu * math.exp(0.5 * (la + lb)) + 2.0 * math.sinh(0.25 * (la - lb)) ** 2
    return SQRT2 * 2.0 * math.asinh(math.sqrt(0.5 * x))


def _sinh_ratio(num: float, den: float) -> float:
    """sinh(num)/sinh(den) for 0 <= num <= den, den > 0, without overflow."""
    return math.exp(num - den) * (-math.expm1(-2.0 * num)) / (-math.expm1(-2.0 * den))


def gaussian_geodesic(a: GaussianBelief, b: GaussianBelief, s: float) -> GaussianBelief:
    """Point at arc-length fraction s of the geodesic from a to b."""
    if s <= 0.0:
        return a
    if s >= 1.0:
        return b
    D = _half_plane_distance(a, b)
    if D == 0.0:
        return a
    wa = _sinh_ratio((1.0 - s) * D, D)
    wb = _sinh_ratio(s * D, D)
    # hyperboloid components 1/y and x/y interpolate linearly with these weights
    ya, yb = a.sigma(), b.sigma()
    inv_y = wa / ya + wb / yb
    x_over_y = wa * (a.mu / SQRT2) / ya + wb * (b.mu / SQRT2) / yb
    sigma = 1.0 / inv_y
    mu = SQRT2 * x_over_y * sigma
    return GaussianBelief(mu, inv_y * inv_y)


def gaussian_kl(a: GaussianBelief, b: GaussianBelief) -> float:
    """KL(a ‖ b) for univariate Gaussians, in nats."""
    rho = b.tau / a.tau
    dmu = a.mu - b.mu
    delta = rho - 1.0
    # ½(ρ - 1 - ln ρ) is written through log1p to survive ρ ≈ 1
    kl = 0.5 * (delta - math.log1p(delta)) + 0.5 * b.tau * dmu * dmu
    return max(kl, 0.0)


def gaussian_path_length(path: Sequence[GaussianBelief]) -> float:
    """Fisher–Rao length of the piecewise-linear (μ, τ) path through the given beliefs."""
    if len(path) < 2:
        return 0.0
    mu = np.array([p.mu for p in path])
    tau = np.array([p.tau for p in path])
    tau_mid = 0.5 * (tau[1:] + tau[:-1])
    dmu = np.diff(mu)
    dtau = np.diff(tau)
    seg = np.sqrt(tau_mid * dmu ** 2 + dtau ** 2 / (2.0 * tau_mid ** 2))
    return float(np.sum(seg))


def euclidean_path_efficiency(a: GaussianBelief, b: GaussianBelief) -> float:
    """d_F(a, b) over the Fisher–Rao length of the straight (μ, σ) segment.

    The straight segment has closed-form length √(Δμ² + 2Δσ²) / L(σ_a, σ_b)
    where L is the logarithmic mean. The ratio is 1 when the segment is a
    geodesic (equal means) and below 1 otherwise.
    """
    if a == b:
        return 1.0
    sa, sb = a.sigma(), b.sigma()
    dmu = b.mu - a.mu
    ds = sb - sa
    ell = math.log(sb / sa)
    log_mean = sa * (math.expm1(ell) / ell) if ell != 0.0 else sa
    straight = math.sqrt(dmu * dmu + 2.0 * ds * ds) / log_mean
    ratio = gaussian_fr_distance(a, b) / straight
    return min(ratio, 1.0)
