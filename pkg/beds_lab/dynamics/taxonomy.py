"""Six-class trajectory taxonomy.

Each component (τ̄ and κ) is crystallizable when the relative spread of its
trailing window, std / |mean|, falls below ``tol``; maintainable
otherwise. When the two flags disagree the class names the component that
dominates: a maintainable component whose relative spread reaches
``dominance`` gives M-<component>, a milder one leaves the class with the
crystallizable side (C-<component>).
"""
import math

import numpy as np

from ..geometry.beliefs import GaussianBelief, VonMisesBelief
from ..utils.errors import DomainError, InsufficientData
from ..utils.logger import get_logger
from .state import BedsState, ComponentRegime, TaxonomyClass, TaxonomyLabel, Trajectory

logger = get_logger("dynamics.taxonomy")

DEFAULT_WINDOW = 50
DEFAULT_TOL = 1e-3
DEFAULT_DOMINANCE = 0.1

PATTERNS = ("constant", "oscillating", "drifting")


def relative_spread(values, tol: float) -> float:
    """Sample std over |mean|; a zero mean falls back to ``tol`` as the scale."""
    v = np.asarray(values, dtype=float)
    scale = abs(float(np.mean(v)))
    return float(np.std(v, ddof=1)) / (scale if scale > 0.0 else tol)


def label_from_flags(
    tau_regime: ComponentRegime,
    kappa_regime: ComponentRegime,
    tau_spread: float = 0.0,
    kappa_spread: float = 0.0,
    dominance: float = DEFAULT_DOMINANCE,
) -> TaxonomyLabel:
    C, M = ComponentRegime.CRYSTALLIZABLE, ComponentRegime.MAINTAINABLE
    if tau_regime == C and kappa_regime == C:
        cls = TaxonomyClass.C_FULL
    elif tau_regime == M and kappa_regime == M:
        cls = TaxonomyClass.M_FULL
    elif tau_regime == C:
        cls = TaxonomyClass.M_KAPPA if kappa_spread >= dominance else TaxonomyClass.C_TAU
    else:
        cls = TaxonomyClass.M_TAU if tau_spread >= dominance else TaxonomyClass.C_KAPPA
    return TaxonomyLabel(tau_regime, kappa_regime, cls)


def classify_trajectory(
    traj: Trajectory,
    window: int = DEFAULT_WINDOW,
    tol: float = DEFAULT_TOL,
    dominance: float = DEFAULT_DOMINANCE,
) -> TaxonomyLabel:
    if window < 2:
        raise DomainError(f"window must be >= 2, got {window}")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    if len(traj) < 2 * window:
        raise InsufficientData(f"trajectory has {len(traj)} samples, classification needs {2 * window}")

    spreads = {}
    regimes = {}
    for name in ("tau", "kappa"):
        tail = traj.component_series(name)[-window:]
        spreads[name] = relative_spread(tail, tol)
        regimes[name] = ComponentRegime.CRYSTALLIZABLE if spreads[name] < tol else ComponentRegime.MAINTAINABLE

    label = label_from_flags(regimes["tau"], regimes["kappa"], spreads["tau"], spreads["kappa"], dominance)
    logger.info(
        f"taxonomy {label.cls.value}: τ {regimes['tau'].value} (spread {spreads['tau']:.3g}), "
        f"κ {regimes['kappa'].value} (spread {spreads['kappa']:.3g})"
    )
    return label


def _pattern(kind: str, level: float, amplitude: float, t: np.ndarray, period: float) -> np.ndarray:
    if kind == "constant":
        return np.full_like(t, level)
    if kind == "oscillating":
        return level * (1.0 + amplitude * np.sin(2.0 * math.pi * t / period))
    if kind == "drifting":
        return level * np.exp(amplitude * t / t[-1])
    raise DomainError(f"unknown pattern {kind!r}; expected one of {PATTERNS}")


def synthetic_trajectory(
    tau_pattern: str = "constant",
    kappa_pattern: str = "constant",
    n: int = 200,
    dt: float = 0.1,
    tau_level: float = 1.0,
    kappa_level: float = 1.0,
    tau_amplitude: float = 0.5,
    kappa_amplitude: float = 0.5,
    period: float = 2.0 * math.pi,
    mu: float = 0.0,
    phi: float = 0.0,
) -> Trajectory:
    """Scripted τ/κ series (constant, oscillating or drifting) as a trajectory."""
    if not 0.0 <= tau_amplitude < 1.0 or not 0.0 <= kappa_amplitude < 1.0:
        raise DomainError("pattern amplitudes must lie in [0, 1)")
    t = np.arange(n, dtype=float) * dt
    taus = _pattern(tau_pattern, tau_level, tau_amplitude, t, period)
    kappas = _pattern(kappa_pattern, kappa_level, kappa_amplitude, t, period)
    traj = Trajectory()
    for ti, tau, kappa in zip(t, taus, kappas):
        traj.append(float(ti), BedsState((GaussianBelief(mu, float(tau)),), VonMisesBelief(phi, float(kappa))))
    return traj
