"""Value rules shared by the scenario schemas.

Each rule raises ``ValueError`` with a message naming the offending key, which
pydantic turns into a validation issue carrying the key's line number.
"""
from typing import Optional

from ..dynamics.thermo import thermal_energy
from ..utils.logger import get_logger

logger = get_logger("config_guard")

UNITS = ("natural", "physical")


def check_timescales(potential_every: int, prune_every: int) -> None:
    if potential_every > prune_every:
        raise ValueError(
            f"prune_every: timescale ordering violated, potential_every ({potential_every}) > prune_every ({prune_every})"
        )


def check_step(dt: float, t_end: float) -> None:
    if dt > t_end:
        raise ValueError(f"dt: step {dt} exceeds t_end {t_end}")


def check_same_length(name_a: str, a, name_b: str, b) -> None:
    if len(a) != len(b):
        raise ValueError(f"{name_b}: {len(b)} values but {name_a} has {len(a)}")


def resolve_kT(units: str, kT: float, temperature_kelvin: Optional[float]) -> float:
    """Thermal energy for the run: kT as given, or k_B·T in physical mode."""
    if units not in UNITS:
        raise ValueError(f"units: expected one of {UNITS}, got {units!r}")
    if units == "natural":
        return kT
    if temperature_kelvin is None:
        raise ValueError("temperature_kelvin: required when units = physical")
    return thermal_energy(temperature_kelvin)
