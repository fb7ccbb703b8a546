"""Plain and natural-gradient descent on the BEDS loss."""
import math
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..dynamics.state import BedsState, Trajectory
from ..geometry.beliefs import GaussianBelief, VonMisesBelief
from ..geometry.product import spatial_distance_sq
from ..geometry.von_mises import vonmises_metric
from ..utils.errors import DomainError, NumericFailure
from ..utils.logger import get_logger
from .loss import BedsGradient, BedsTarget, GradientLike, as_gradient, beds_loss, beds_loss_gradient

logger = get_logger("regularizers.optimizers")

POSITIVE_FLOOR = 1e-9
METHODS = ("plain", "natural")
COORDINATES = ("tau", "log_tau")

# state -> (data loss value, gradient over (μ_i, τ_i, φ, κ) or None)
DataObjective = Callable[[BedsState], Tuple[float, GradientLike]]


def _check_eta(eta: float) -> None:
    if not eta > 0.0:
        raise DomainError(f"eta must be positive, got {eta}")


def _floor(x: float) -> float:
    return x if x > POSITIVE_FLOOR else POSITIVE_FLOOR


def _assemble(s: BedsState, mu, tau, phi: float, kappa: float) -> BedsState:
    if not (np.all(np.isfinite(mu)) and np.all(np.isfinite(tau)) and math.isfinite(phi) and math.isfinite(kappa)):
        raise NumericFailure("optimizer step produced a non-finite coordinate")
    spatial = tuple(GaussianBelief(float(m), _floor(float(t))) for m, t in zip(mu, tau))
    return BedsState(spatial, VonMisesBelief(phi, _floor(kappa)))


def gradient_step(s: BedsState, grad: GradientLike, eta: float) -> BedsState:
    _check_eta(eta)
    g = as_gradient(grad, s.dim)
    mu = np.array(s.mus) - eta * g.mu
    tau = np.array(s.taus) - eta * g.tau
    return _assemble(s, mu, tau, s.temporal.phi - eta * g.phi, s.temporal.kappa - eta * g.kappa)


def natural_gradient_step(
    s: BedsState,
    grad: GradientLike,
    eta: float,
    coordinates: str = "tau",
    skipped: Optional[List[str]] = None,
) -> BedsState:
    """θ ← θ - η·G(θ)⁻¹·∇L with the diagonal BEDS metric.

    ``coordinates="log_tau"`` takes the same step in (μ, ln τ); the two agree to
    first order in η. When κ = 0 the φ direction has zero metric and is left
    untouched; "phi" is appended to ``skipped`` if a list is given.
    """
    _check_eta(eta)
    if coordinates not in COORDINATES:
        raise DomainError(f"coordinates must be one of {COORDINATES}, got {coordinates!r}")
    g = as_gradient(grad, s.dim)
    tau0 = np.array(s.taus)
    mu = np.array(s.mus) - eta * g.mu / tau0
    if coordinates == "tau":
        tau = tau0 - eta * 2.0 * tau0 ** 2 * g.tau
    else:
        # u = ln τ, ∂L/∂u = τ ∂L/∂τ, g_uu = ½
        tau = tau0 * np.exp(-2.0 * eta * tau0 * g.tau)

    metric = vonmises_metric(s.temporal.kappa)
    phi = s.temporal.phi
    if metric.g11 > 0.0:
        phi = phi - eta * g.phi / metric.g11
    elif g.phi != 0.0:
        logger.warning("natural step: κ = 0 makes the φ metric singular; φ component skipped")
        if skipped is not None:
            skipped.append("phi")
    kappa = s.temporal.kappa - eta * g.kappa / metric.g22
    return _assemble(s, mu, tau, phi, kappa)


def _spatial_distance(a: BedsState, b: BedsState) -> float:
    return math.sqrt(spatial_distance_sq(a, b))


def optimize(
    init: BedsState,
    target: BedsTarget,
    data_objective: Optional[DataObjective] = None,
    lam: float = 1.0,
    eta: float = 0.05,
    steps: int = 100,
    method: str = "natural",
) -> Trajectory:
    """Iterate plain or natural steps on the BEDS loss.

    Each record carries the loss breakdown, the spatial Fisher–Rao distance to
    the target (``d_F_spatial``) and the squared spatial step size
    (``step_dF2``). ``data_objective`` returns (value, gradient or None).
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    if method not in METHODS:
        raise DomainError(f"method must be one of {METHODS}, got {method!r}")
    _check_eta(eta)

    def evaluate(state: BedsState, k: int):
        value, grad = data_objective(state) if data_objective is not None else (0.0, None)
        breakdown = beds_loss(state, target, lam, value, strict=False)
        if not math.isfinite(breakdown.total):
            raise NumericFailure(f"non-finite loss at step {k}", step=k)
        return breakdown, grad

    traj = Trajectory()
    state = init
    breakdown, data_grad = evaluate(state, 0)
    traj.append(0, state, **_record(breakdown, _spatial_distance(state, target.state_star), 0.0))
    for k in range(1, steps + 1):
        grad = beds_loss_gradient(state, target, lam, data_grad, strict=False)
        try:
            if method == "natural":
                new_state = natural_gradient_step(state, grad, eta)
            else:
                new_state = gradient_step(state, grad, eta)
        except NumericFailure as e:
            raise NumericFailure(str(e), step=k) from e
        step_sq = spatial_distance_sq(state, new_state)
        state = new_state
        breakdown, data_grad = evaluate(state, k)
        traj.append(k, state, **_record(breakdown, _spatial_distance(state, target.state_star), step_sq))
        logger.debug(f"step {k}: total={breakdown.total:.6g}")
    logger.info(f"optimize[{method}] {steps} steps: final loss {breakdown.total:.6g}")
    return traj


def _record(b, d_spatial: float, step_sq: float) -> dict:
    return {
        "spatial_mu": b.spatial_mu,
        "spatial_tau": b.spatial_tau,
        "temporal_phi": b.temporal_phi,
        "temporal_kappa": b.temporal_kappa,
        "data": b.data,
        "total": b.total,
        "d_F_spatial": d_spatial,
        "step_dF2": step_sq,
    }


def steps_to_threshold(traj: Trajectory, threshold: float) -> Optional[int]:
    """First step whose spatial distance to the target is below ``threshold``."""
    for t, extra in zip(traj.times, traj.extras):
        if extra.get("d_F_spatial", math.inf) < threshold:
            return int(t)
    return None


def quadratic_data_objective(center: BedsState, weight: float = 1.0) -> DataObjective:
    """Synthetic estimation task: weight·Σ(μ_i - c_i)² with its gradient."""
    c = np.array(center.mus)

    def objective(s: BedsState):
        d = np.array(s.mus) - c
        grad = BedsGradient(2.0 * weight * d, np.zeros(s.dim), 0.0, 0.0)
        return weight * float(d @ d), grad

    return objective
