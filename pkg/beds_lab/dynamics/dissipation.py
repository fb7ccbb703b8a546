"""Dissipation dynamics: dτ/dt = -2γτ per spatial factor, dκ/dt = -γ_κ κ."""
import math
import sys

import numpy as np

from ..geometry.beliefs import GaussianBelief, VonMisesBelief
from ..utils.errors import DomainError, NumericFailure
from ..utils.logger import get_logger
from .crystallization import DEFAULT_EPS
from .state import BedsState, DissipationParams, Trajectory

logger = get_logger("dynamics.dissipation")

_TINY = sys.float_info.min


def _check_underflow(taus, t: float, step=None) -> None:
    low = float(min(taus))
    if low < _TINY:
        raise NumericFailure(f"precision underflow at t={t}: tau={low!r}", step=step)


def dissipate_closed_form(s: BedsState, p: DissipationParams, t: float) -> BedsState:
    if t < 0.0:
        raise DomainError(f"t must be >= 0, got {t}")
    tau_decay = math.exp(-2.0 * p.gamma * t)
    kappa_decay = math.exp(-p.gamma_kappa * t)
    taus = [b.tau * tau_decay for b in s.spatial]
    _check_underflow(taus, t)
    spatial = tuple(GaussianBelief(b.mu, tau) for b, tau in zip(s.spatial, taus))
    return BedsState(spatial, VonMisesBelief(s.temporal.phi, s.temporal.kappa * kappa_decay))


def _rates(s: BedsState, p: DissipationParams) -> np.ndarray:
    return np.array([2.0 * p.gamma] * s.dim + [p.gamma_kappa])


def _rk4_step(y: np.ndarray, rates: np.ndarray, h: float) -> np.ndarray:
    def f(v):
        return -rates * v

    k1 = f(y)
    k2 = f(y + 0.5 * h * k1)
    k3 = f(y + 0.5 * h * k2)
    k4 = f(y + h * k3)
    return y + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0


def time_grid(t_end: float, dt: float) -> np.ndarray:
    """0, dt, 2dt, ... with the last point pinned to t_end."""
    n = max(1, int(math.ceil(t_end / dt - 1e-9)))
    t = np.arange(n + 1, dtype=float) * dt
    t[-1] = t_end
    return t


def dissipate_rk4(
    s: BedsState,
    p: DissipationParams,
    t_end: float,
    dt: float,
    record_every: int = 1,
    eps: float = DEFAULT_EPS,
) -> Trajectory:
    """RK4 integration of the dissipation ODE from t = 0 to t_end.

    ``record_every`` thins the stored trajectory; the final state is always kept.
    ``eps`` sets the regime boundaries recorded with each state.
    """
    if not dt > 0.0:
        raise DomainError(f"dt must be positive, got {dt}")
    if dt > t_end:
        raise DomainError(f"dt ({dt}) exceeds t_end ({t_end})")
    grid = time_grid(t_end, dt)
    rates = _rates(s, p)
    y = np.array(s.taus + [s.temporal.kappa], dtype=float)
    mus, phi = s.mus, s.temporal.phi

    traj = Trajectory(eps=eps)
    traj.append(0.0, s)
    last = len(grid) - 1
    for i in range(1, len(grid)):
        y = _rk4_step(y, rates, grid[i] - grid[i - 1])
        if not np.all(np.isfinite(y)):
            raise NumericFailure(f"non-finite state at t={grid[i]}", step=i)
        _check_underflow(y[:-1], grid[i], step=i)
        if i % record_every == 0 or i == last:
            traj.append(grid[i], BedsState.from_arrays(mus, y[:-1].tolist(), phi, float(y[-1])))
    logger.debug(f"RK4 dissipation: {last} steps, dt={dt}")
    return traj


def crystallization_decay_rate(p: DissipationParams) -> float:
    """Exponential rate of C(t) under pure dissipation: 2γ + γ_κ."""
    return 2.0 * p.gamma + p.gamma_kappa
