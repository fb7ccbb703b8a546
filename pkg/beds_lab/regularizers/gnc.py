"""Graduated non-convexity with a KL-to-prior dissipation term.

At schedule sample k the Gaussian q = N(m, 1/τ) minimises

    F_k(q) = E_q[L_α(θ)] + β_k · KL(q ‖ π),   L_α = (1 - α)·L_smooth + α·L_target

by natural-gradient steps on F_k/β_k (same minimiser) in natural-parameter form:

    τ ← (1 - ρ)τ + ρ(max(E_q[L_α''], 0)/β + τ_π)
    m ← m - ρ(E_q[L_α']/β + τ_π(m - m_π)) / τ

E_q[L'] and E_q[L''] come from Stein's identities evaluated on Gauss–Hermite
nodes, so only function values of the objectives are needed.
"""
import math
from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple

import numpy as np

from ..dynamics.mappings import sac_coherence
from ..dynamics.state import BedsState, Trajectory
from ..geometry.beliefs import GaussianBelief, VonMisesBelief
from ..geometry.fisher_rao import gaussian_kl
from ..utils.cache import gauss_hermite_rule
from ..utils.errors import DomainError, NumericFailure
from ..utils.logger import get_logger

logger = get_logger("regularizers.gnc")

Objective = Callable[[np.ndarray], np.ndarray]

GH_NODES = 16
DEFAULT_RHO = 0.1


@dataclass(frozen=True)
class GncSchedule:
    alpha: Tuple[float, ...]
    beta: Tuple[float, ...]
    continuation: bool = True

    def __post_init__(self):
        alpha = tuple(float(a) for a in self.alpha)
        beta = tuple(float(b) for b in self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if len(alpha) < 2 or len(alpha) != len(beta):
            raise DomainError("alpha and beta must be sampled at the same >= 2 points")
        if any(not 0.0 <= a <= 1.0 for a in alpha):
            raise DomainError("alpha must stay within [0, 1]")
        if any(not b > 0.0 for b in beta):
            raise DomainError("beta must be strictly positive")
        if self.continuation:
            if any(a1 < a0 for a0, a1 in zip(alpha, alpha[1:])):
                raise DomainError("alpha must be nondecreasing")
            if alpha[0] > 0.05 or alpha[-1] < 0.95:
                raise DomainError("a continuation schedule starts at alpha <= 0.05 and ends at alpha >= 0.95")

    @classmethod
    def fixed(cls, alpha: float, beta: float, n: int = 2) -> "GncSchedule":
        """Constant (α, β) for n samples; not a continuation sweep."""
        return cls((alpha,) * n, (beta,) * n, continuation=False)

    def __len__(self) -> int:
        return len(self.alpha)


def linear_alpha(n: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, n)


def coupled_schedule(n: int, beta_start: float, beta_end: float) -> GncSchedule:
    """β rises linearly with α: the prior tightens as the objective sharpens."""
    alpha = linear_alpha(n)
    return GncSchedule(tuple(alpha), tuple(beta_start + (beta_end - beta_start) * alpha))


def independent_schedule(n: int, beta: float) -> GncSchedule:
    return GncSchedule(tuple(linear_alpha(n)), (beta,) * n)


def effective_temperature(beta: float) -> float:
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    return 1.0 / beta


def gnc_objective(theta, alpha: float, smooth: Objective, target_fn: Objective):
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    return (1.0 - alpha) * smooth(theta) + alpha * target_fn(theta)


def double_well(theta):
    """(θ² - 1)², wells at ±1."""
    return (np.asarray(theta) ** 2 - 1.0) ** 2


def smoothed_double_well(smoothing: float = 1.0) -> Objective:
    """E[(θ + ε)² - 1)²] with ε ~ N(0, s²): θ⁴ + (6s² - 2)θ² + 3s⁴ - 2s² + 1."""
    s2 = float(smoothing)
    if s2 < 0.0:
        raise DomainError("smoothing variance must be >= 0")

    def smooth(theta):
        th = np.asarray(theta)
        return th ** 4 + (6.0 * s2 - 2.0) * th ** 2 + 3.0 * s2 * s2 - 2.0 * s2 + 1.0

    return smooth


def quadratic_bowl(center: float = 0.0) -> Objective:
    def bowl(theta):
        return (np.asarray(theta) - center) ** 2

    return bowl


def expected_derivatives(q: GaussianBelief, fn: Objective, n_nodes: int = GH_NODES):
    """(E_q[f], E_q[f'], E_q[f'']) from function values via Stein's identities."""
    z, w = gauss_hermite_rule(n_nodes)
    sigma = q.sigma()
    vals = np.asarray(fn(q.mu + sigma * z), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise NumericFailure("objective is non-finite on the quadrature nodes")
    e0 = float(w @ vals)
    e1 = float(w @ (z * vals)) / sigma
    e2 = float(w @ ((z * z - 1.0) * vals)) / (sigma * sigma)
    return e0, e1, e2


def _gnc_state(q: GaussianBelief, beta: float) -> BedsState:
    # coherence of the tempered posterior is the inverse effective temperature
    return BedsState((q,), VonMisesBelief(0.0, sac_coherence(effective_temperature(beta))))


def run_gnc(
    init: GaussianBelief,
    schedule: GncSchedule,
    prior: GaussianBelief,
    target_fn: Objective = double_well,
    smooth_fn: Objective = None,
    steps_per_stage: int = 100,
    rho: float = DEFAULT_RHO,
    n_nodes: int = GH_NODES,
) -> Trajectory:
    if smooth_fn is None:
        smooth_fn = smoothed_double_well(1.0)
    if steps_per_stage < 1:
        raise DomainError("steps_per_stage must be >= 1")
    if not 0.0 < rho <= 1.0:
        raise DomainError(f"rho must lie in (0, 1], got {rho}")

    traj = Trajectory()
    q = init
    traj.append(0, _gnc_state(q, schedule.beta[0]), **_gnc_record(q, prior, schedule.alpha[0], schedule.beta[0], smooth_fn, target_fn, n_nodes))

    for k, (alpha, beta) in enumerate(zip(schedule.alpha, schedule.beta), start=1):
        def objective(theta, _a=alpha):
            return gnc_objective(theta, _a, smooth_fn, target_fn)

        for step in range(steps_per_stage):
            _, d1, d2 = expected_derivatives(q, objective, n_nodes)
            tau = (1.0 - rho) * q.tau + rho * (max(d2, 0.0) / beta + prior.tau)
            mu = q.mu - rho * (d1 / beta + prior.tau * (q.mu - prior.mu)) / tau
            if not (math.isfinite(mu) and math.isfinite(tau)):
                raise NumericFailure(f"GNC update diverged in stage {k}", step=step)
            q = GaussianBelief(mu, tau)
        record = _gnc_record(q, prior, alpha, beta, smooth_fn, target_fn, n_nodes)
        traj.append(k, _gnc_state(q, beta), **record)
        logger.debug(f"GNC stage {k}: α={alpha:.3f} β={beta:.4g} m={q.mu:.6f} τ={q.tau:.6g}")

    logger.info(f"GNC finished after {len(schedule)} stages: m={q.mu:.6f}, τ={q.tau:.6g}")
    return traj


def _gnc_record(q, prior, alpha, beta, smooth_fn, target_fn, n_nodes) -> Dict[str, float]:
    expected, _, _ = expected_derivatives(q, lambda th: gnc_objective(th, alpha, smooth_fn, target_fn), n_nodes)
    kl = gaussian_kl(q, prior)
    return {
        "alpha": alpha,
        "beta": beta,
        "T_eff": effective_temperature(beta),
        "expected_loss": expected,
        "kl_to_prior": kl,
        "free_energy": expected + beta * kl,
        "target_at_mean": float(target_fn(q.mu)),
    }


def compare_gnc_schedules(
    init: GaussianBelief,
    prior: GaussianBelief,
    n_stages: int = 21,
    steps_per_stage: int = 100,
    beta_start: float = 0.01,
    beta_end: float = 0.05,
    smoothing: float = 1.0,
    target_fn: Objective = double_well,
) -> Dict[str, Dict[str, float]]:
    """Run the coupled and the constant-β schedules side by side.

    Reports where each ends; which one lands lower is an experimental outcome,
    not something this function asserts.
    """
    smooth = smoothed_double_well(smoothing)
    schedules: Dict[str, GncSchedule] = {
        "coupled": coupled_schedule(n_stages, beta_start, beta_end),
        "independent": independent_schedule(n_stages, beta_start),
    }
    results = {}
    for name, sched in schedules.items():
        final = run_gnc(init, sched, prior, target_fn, smooth, steps_per_stage).final.spatial[0]
        results[name] = {
            "final_mu": final.mu,
            "final_tau": final.tau,
            "target_at_mean": float(target_fn(final.mu)),
        }
    return results
