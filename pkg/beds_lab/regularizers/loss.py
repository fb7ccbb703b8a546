"""The BEDS loss decomposition and its analytic gradient.

For a state θ = (μ_i, τ_i, φ, κ) and a target θ*:

    spatial_mu     = Σ τ_i (μ_i - μ*_i)²
    spatial_tau    = Σ (τ_i - τ*_i)² / (2 τ_i τ*_i)
    temporal_phi   = κ (1 - cos(φ - φ*))          (current κ weights the phase term)
    temporal_kappa = (κ - κ*)² / (2 κ κ*)
    total          = sum of the above + λ·data
"""
import math
from dataclasses import asdict, dataclass
from typing import Optional, Sequence, Union

import numpy as np

from ..dynamics.state import BedsState
from ..utils.errors import DegenerateCoherence, DimensionError, DomainError
from ..utils.logger import get_logger

logger = get_logger("regularizers.loss")

DEGENERATE_PENALTY = 1e12


@dataclass(frozen=True)
class BedsTarget:
    state_star: BedsState

    @classmethod
    def scalar(cls, mu: float, tau: float, phi: float = 0.0, kappa: float = 1.0) -> "BedsTarget":
        return cls(BedsState.scalar(mu, tau, phi, kappa))


@dataclass(frozen=True)
class LossBreakdown:
    spatial_mu: float
    spatial_tau: float
    temporal_phi: float
    temporal_kappa: float
    data: float
    lam: float
    total: float

    def as_dict(self) -> dict:
        out = asdict(self)
        out["lambda"] = out.pop("lam")
        return out


@dataclass(frozen=True)
class BedsGradient:
    """Partial derivatives over (μ_i, τ_i, φ, κ)."""

    mu: np.ndarray
    tau: np.ndarray
    phi: float
    kappa: float

    @classmethod
    def zeros(cls, dim: int) -> "BedsGradient":
        return cls(np.zeros(dim), np.zeros(dim), 0.0, 0.0)

    @classmethod
    def from_vector(cls, v: Sequence[float], dim: int) -> "BedsGradient":
        v = np.asarray(v, dtype=float)
        if v.shape != (2 * dim + 2,):
            raise DimensionError(f"gradient vector must have {2 * dim + 2} entries, got {v.shape}")
        return cls(v[:dim].copy(), v[dim:2 * dim].copy(), float(v[-2]), float(v[-1]))

    def as_vector(self) -> np.ndarray:
        return np.concatenate((self.mu, self.tau, [self.phi, self.kappa]))

    @property
    def dim(self) -> int:
        return len(self.mu)


GradientLike = Union[BedsGradient, Sequence[float], np.ndarray, None]


def as_gradient(g: GradientLike, dim: int) -> BedsGradient:
    if g is None:
        return BedsGradient.zeros(dim)
    if isinstance(g, BedsGradient):
        if g.dim != dim:
            raise DimensionError(f"gradient has dimension {g.dim}, state has {dim}")
        return g
    return BedsGradient.from_vector(g, dim)


def _check_dims(s: BedsState, target: BedsTarget) -> BedsState:
    star = target.state_star
    if s.dim != star.dim:
        raise DimensionError(f"state has {s.dim} spatial factors, target has {star.dim}")
    return star


def _check_lambda(lam: float) -> None:
    if not lam > 0.0:
        raise DomainError(f"lambda must be positive, got {lam}")


def _degenerate(kappa: float, kappa_star: float) -> bool:
    return kappa == 0.0 or kappa_star == 0.0


def beds_loss(s: BedsState, target: BedsTarget, lam: float, data_loss: float = 0.0, strict: bool = True) -> LossBreakdown:
    """Loss decomposition; ``strict=False`` swaps the κ = 0 singularity for a finite penalty."""
    star = _check_dims(s, target)
    _check_lambda(lam)
    mu = np.array(s.mus)
    tau = np.array(s.taus)
    mu_s = np.array(star.mus)
    tau_s = np.array(star.taus)

    spatial_mu = math.fsum(tau * (mu - mu_s) ** 2)
    spatial_tau = math.fsum((tau - tau_s) ** 2 / (2.0 * tau * tau_s))
    kappa, kappa_s = s.temporal.kappa, star.temporal.kappa
    temporal_phi = kappa * (1.0 - math.cos(s.temporal.phi - star.temporal.phi))
    if _degenerate(kappa, kappa_s):
        if strict:
            raise DegenerateCoherence(f"temporal_kappa is singular at κ={kappa}, κ*={kappa_s}")
        logger.warning(f"degenerate coherence (κ={kappa}, κ*={kappa_s}); using penalty {DEGENERATE_PENALTY:g}")
        temporal_kappa = DEGENERATE_PENALTY if kappa != kappa_s else 0.0
    else:
        temporal_kappa = (kappa - kappa_s) ** 2 / (2.0 * kappa * kappa_s)

    total = spatial_mu + spatial_tau + temporal_phi + temporal_kappa + lam * data_loss
    return LossBreakdown(spatial_mu, spatial_tau, temporal_phi, temporal_kappa, float(data_loss), lam, total)


def beds_loss_gradient(
    s: BedsState,
    target: BedsTarget,
    lam: float,
    data_grad: GradientLike = None,
    strict: bool = True,
) -> BedsGradient:
    star = _check_dims(s, target)
    _check_lambda(lam)
    dg = as_gradient(data_grad, s.dim)

    mu = np.array(s.mus)
    tau = np.array(s.taus)
    dmu = mu - np.array(star.mus)
    tau_s = np.array(star.taus)
    g_mu = 2.0 * tau * dmu
    g_tau = dmu ** 2 + 0.5 * (1.0 / tau_s - tau_s / tau ** 2)

    kappa, kappa_s = s.temporal.kappa, star.temporal.kappa
    dphi = s.temporal.phi - star.temporal.phi
    g_phi = kappa * math.sin(dphi)
    g_kappa = 1.0 - math.cos(dphi)
    if _degenerate(kappa, kappa_s):
        if strict:
            raise DegenerateCoherence(f"temporal_kappa gradient is singular at κ={kappa}, κ*={kappa_s}")
    else:
        g_kappa += 0.5 * (1.0 / kappa_s - kappa_s / kappa ** 2)

    return BedsGradient(
        g_mu + lam * dg.mu,
        g_tau + lam * dg.tau,
        g_phi + lam * dg.phi,
        g_kappa + lam * dg.kappa,
    )


def total_loss(s: BedsState, target: BedsTarget, lam: float, data_loss: float = 0.0, strict: bool = True) -> float:
    return beds_loss(s, target, lam, data_loss, strict).total
