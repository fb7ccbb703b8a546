"""Crystallization index, regime classification and threshold flags."""
import math
from enum import Enum
from typing import TYPE_CHECKING, List, Tuple

from ..utils.errors import DomainError

if TYPE_CHECKING:
    from .state import BedsState, Trajectory

DEFAULT_EPS = 0.1


class Regime(str, Enum):
    FLUID = "fluid"
    TRANSITION = "transition"
    CRYSTALLIZED = "crystallized"


class CrystalFlag(str, Enum):
    NONE = "none"
    POSITION = "position"
    PHASE = "phase"
    COMPLETE = "complete"


def mean_precision(s: "BedsState") -> float:
    """Geometric mean of the spatial precisions."""
    taus = s.taus
    if len(taus) == 1:
        return taus[0]
    return math.exp(math.fsum(math.log(t) for t in taus) / len(taus))


def crystallization_index(s: "BedsState") -> float:
    return mean_precision(s) * s.temporal.kappa


def classify_regime(C: float, eps: float = DEFAULT_EPS) -> Regime:
    if not 0.0 < eps < 1.0:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    if C < eps:
        return Regime.FLUID
    if C > 1.0 / eps:
        return Regime.CRYSTALLIZED
    return Regime.TRANSITION


def crystallization_flags(s: "BedsState", tau_crit: float, kappa_crit: float) -> CrystalFlag:
    if tau_crit <= 0.0 or kappa_crit <= 0.0:
        raise DomainError("crystallization thresholds must be positive")
    position = min(s.taus) > tau_crit
    phase = s.temporal.kappa > kappa_crit
    if position and phase:
        return CrystalFlag.COMPLETE
    if position:
        return CrystalFlag.POSITION
    if phase:
        return CrystalFlag.PHASE
    return CrystalFlag.NONE


def crystallization_series(traj: "Trajectory") -> Tuple[List[float], List[str]]:
    """C(t) and the regime label at every recorded time."""
    return [d["C"] for d in traj.diagnostics], [d["regime"] for d in traj.diagnostics]
