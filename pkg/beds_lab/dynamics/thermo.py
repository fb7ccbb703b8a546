"""Thermodynamic bounds: Landauer cost, erasure energy, information rate, power, efficiency."""
import math

from scipy.constants import Boltzmann

from ..geometry.beliefs import GaussianBelief
from ..geometry.fisher_rao import gaussian_kl
from ..utils.errors import DomainError, PhysicalViolation

LN2 = math.log(2.0)


def _positive(name: str, value: float) -> None:
    if not value > 0.0:
        raise DomainError(f"{name} must be positive, got {value}")


def _nonnegative(name: str, value: float) -> None:
    if not value >= 0.0:
        raise DomainError(f"{name} must be >= 0, got {value}")


def thermal_energy(temperature_kelvin: float) -> float:
    """k_B·T in joules."""
    _positive("temperature_kelvin", temperature_kelvin)
    return Boltzmann * temperature_kelvin


def landauer_cost(bits: float, kT: float) -> float:
    _nonnegative("bits", bits)
    _positive("kT", kT)
    return bits * kT * LN2


def min_erasure_energy(q: GaussianBelief, q_star: GaussianBelief, kT: float) -> float:
    _positive("kT", kT)
    return kT * LN2 * gaussian_kl(q, q_star)


def min_information_rate(gamma: float, tau_star: float) -> float:
    """γτ*/(2 ln 2) bits per unit time."""
    _nonnegative("gamma", gamma)
    _positive("tau_star", tau_star)
    return gamma * tau_star / (2.0 * LN2)


def min_maintenance_power(gamma: float, tau_star: float, kT: float) -> float:
    _nonnegative("gamma", gamma)
    _positive("tau_star", tau_star)
    _positive("kT", kT)
    return gamma * tau_star * kT / 2.0


def thermo_efficiency(bits_erased: float, E_actual: float, kT: float) -> float:
    """η = Landauer cost / actual energy; refuses energies below the Landauer floor."""
    _positive("E_actual", E_actual)
    floor = landauer_cost(bits_erased, kT)
    if E_actual < floor:
        raise PhysicalViolation(f"E_actual={E_actual:.6g} is below the Landauer floor {floor:.6g}")
    return floor / E_actual


def rate_distortion_bits(source_variance: float, distortion: float) -> float:
    """½·log₂(σ²/D) for D < σ², zero otherwise."""
    _positive("source_variance", source_variance)
    _positive("distortion", distortion)
    if distortion >= source_variance:
        return 0.0
    return 0.5 * math.log2(source_variance / distortion)


def inefficiency_factors(hardware: float, algorithmic: float, dissipative: float):
    """Multiplicative decomposition of 1/η into three overhead ratios (each >= 1).

    Returns (inverse_efficiency, efficiency).
    """
    for name, value in (("hardware", hardware), ("algorithmic", algorithmic), ("dissipative", dissipative)):
        if not value >= 1.0:
            raise DomainError(f"{name} overhead ratio must be >= 1, got {value}")
    inverse = hardware * algorithmic * dissipative
    return inverse, 1.0 / inverse
