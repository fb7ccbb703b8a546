"""Belief value types for the spatial (Gaussian) and temporal (von Mises) factors."""
import math
from dataclasses import dataclass

from ..utils.errors import DomainError

TWO_PI = 2.0 * math.pi


def wrap_phase(phi: float) -> float:
    """Map an angle into [0, 2π)."""
    w = math.fmod(phi, TWO_PI)
    if w < 0.0:
        w += TWO_PI
    # fmod of a tiny negative angle can land exactly on 2π after the shift
    return 0.0 if w >= TWO_PI else w


def phase_difference(phi_from: float, phi_to: float) -> float:
    """Signed shortest rotation taking phi_from to phi_to, in [-π, π)."""
    return wrap_phase(phi_to - phi_from + math.pi) - math.pi


@dataclass(frozen=True)
class GaussianBelief:
    mu: float
    tau: float

    def __post_init__(self):
        mu, tau = float(self.mu), float(self.tau)
        if not math.isfinite(mu):
            raise DomainError(f"mu must be finite, got {self.mu!r}")
        if not (math.isfinite(tau) and tau > 0.0):
            raise DomainError(f"tau must be a finite positive precision, got {self.tau!r}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "tau", tau)

    @classmethod
    def from_sigma(cls, mu: float, sigma: float) -> "GaussianBelief":
        if not sigma > 0.0:
            raise DomainError(f"sigma must be positive, got {sigma!r}")
        return cls(mu, 1.0 / (sigma * sigma))

    def sigma(self) -> float:
        return 1.0 / math.sqrt(self.tau)


@dataclass(frozen=True)
class VonMisesBelief:
    phi: float
    kappa: float

    def __post_init__(self):
        phi, kappa = float(self.phi), float(self.kappa)
        if not math.isfinite(phi):
            raise DomainError(f"phi must be finite, got {self.phi!r}")
        if not (math.isfinite(kappa) and kappa >= 0.0):
            raise DomainError(f"kappa must be finite and >= 0, got {self.kappa!r}")
        object.__setattr__(self, "phi", wrap_phase(phi))
        object.__setattr__(self, "kappa", kappa)


@dataclass(frozen=True)
class MetricTensor2:
    """Diagonal 2x2 metric; both families have zero off-diagonal terms."""

    g11: float
    g22: float

    def __post_init__(self):
        if self.g11 < 0.0 or self.g22 < 0.0:
            raise DomainError(f"metric components must be >= 0, got ({self.g11}, {self.g22})")
