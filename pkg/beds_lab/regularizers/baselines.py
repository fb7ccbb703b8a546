"""Euclidean and SIGReg baselines used for comparison runs."""
import numpy as np

from ..geometry.beliefs import GaussianBelief
from ..geometry.fisher_rao import gaussian_fr_distance
from ..utils.errors import DimensionError, DomainError, InsufficientData


def ridge_loss(theta, theta_star, lam: float, data_loss: float = 0.0) -> float:
    """‖θ - θ*‖² + λ·data."""
    theta = np.asarray(theta, dtype=float)
    theta_star = np.asarray(theta_star, dtype=float)
    if theta.shape != theta_star.shape:
        raise DimensionError(f"shape mismatch: {theta.shape} vs {theta_star.shape}")
    if lam < 0.0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    diff = theta - theta_star
    return float(diff @ diff) + lam * data_loss


def euclidean_fisher_ratio(b: GaussianBelief, d_mu: float = 1e-4) -> float:
    """d_Euclid² / d_F² for a μ-step of size d_mu at b; tends to 1/τ."""
    moved = GaussianBelief(b.mu + d_mu, b.tau)
    d_f = gaussian_fr_distance(b, moved)
    return d_mu * d_mu / (d_f * d_f)


def sigreg_loss(sigmas, alpha_reg: float) -> float:
    """-Σ ln σ_i + α·Σ(σ_i - 1)²: log-det anti-collapse plus a quadratic anchor at 1."""
    s = np.asarray(sigmas, dtype=float)
    if s.size == 0 or np.any(~(s > 0.0)):
        raise DomainError("all sigmas must be positive")
    if not alpha_reg > 0.0:
        raise DomainError(f"alpha_reg must be positive, got {alpha_reg}")
    return float(-np.sum(np.log(s)) + alpha_reg * np.sum((s - 1.0) ** 2))


def sigreg_gradient(sigmas, alpha_reg: float) -> np.ndarray:
    s = np.asarray(sigmas, dtype=float)
    return -1.0 / s + 2.0 * alpha_reg * (s - 1.0)


def sigreg_proxy(embeddings) -> float:
    """‖Σ̂ - I‖_F² + ‖z̄‖² for an n×k embedding matrix (sample covariance, ddof=1)."""
    z = np.asarray(embeddings, dtype=float)
    if z.ndim == 1:
        z = z[:, None]
    n, k = z.shape
    if n < 2:
        raise InsufficientData(f"need at least 2 embeddings, got {n}")
    cov = np.atleast_2d(np.cov(z, rowvar=False, ddof=1))
    mean = z.mean(axis=0)
    return float(np.sum((cov - np.eye(k)) ** 2) + mean @ mean)
