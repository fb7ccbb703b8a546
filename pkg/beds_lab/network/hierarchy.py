"""Recursive crystallization across levels and the bounded maintenance energy."""
import math
import sys
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..dynamics.state import BedsState
from ..geometry.beliefs import GaussianBelief
from ..utils.errors import DivergenceError, DomainError


def _check_ratio(r: float) -> None:
    if r >= 1.0:
        raise DivergenceError(f"dissipation ratio r={r} >= 1: maintenance energy is unbounded")
    if not r > 0.0:
        raise DomainError(f"dissipation ratio must lie in (0, 1), got {r}")


@dataclass(frozen=True)
class Hierarchy:
    levels: Tuple[Tuple[BedsState, float], ...]
    r: float
    E0: float

    def __post_init__(self):
        _check_ratio(self.r)
        if not self.E0 > 0.0:
            raise DomainError(f"E0 must be positive, got {self.E0}")
        if not self.levels:
            raise DomainError("a hierarchy needs at least one level")
        gamma0 = self.levels[0][1]
        for n, (_, gamma_n) in enumerate(self.levels):
            expected = gamma0 * self.r ** n
            if abs(gamma_n - expected) > 1e-12 * max(1.0, abs(expected)):
                raise DomainError(f"level {n}: γ={gamma_n} but γ₀rⁿ={expected}")

    @classmethod
    def geometric(cls, priors: Sequence[BedsState], gamma0: float, r: float, E0: float) -> "Hierarchy":
        return cls(tuple((s, gamma0 * r ** n) for n, s in enumerate(priors)), r, E0)


@dataclass(frozen=True)
class MaintenanceBound:
    partial_sum: float
    bound: float
    gap: float
    satisfied: bool


def crystallize_level(posterior: Sequence[GaussianBelief]) -> List[GaussianBelief]:
    """Level-n posteriors become level-(n+1) priors unchanged."""
    if not posterior:
        raise DomainError("crystallize_level needs at least one posterior")
    return [GaussianBelief(b.mu, b.tau) for b in posterior]


def total_maintenance_energy(h: Hierarchy, n_levels: int) -> MaintenanceBound:
    """E0·Σ_{n<N} rⁿ against the bound E0/(1 - r).

    The gap E0·r^N/(1 - r) is evaluated directly rather than as a difference;
    it underflows to 0 for large N, so ``satisfied`` compares the sum with the
    bound instead.
    """
    _check_ratio(h.r)
    if n_levels < 1:
        raise DomainError("n_levels must be >= 1")
    partial = math.fsum(h.E0 * h.r ** n for n in range(n_levels))
    bound = h.E0 / (1.0 - h.r)
    gap = h.E0 * h.r ** n_levels / (1.0 - h.r)
    satisfied = partial <= bound or math.isclose(partial, bound, rel_tol=4 * sys.float_info.epsilon)
    return MaintenanceBound(partial, bound, gap, satisfied)
