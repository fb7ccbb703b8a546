"""Markov-random-field energy of an agent graph."""
import math
from dataclasses import dataclass

from ..geometry.fisher_rao import gaussian_fr_distance, gaussian_kl
from ..utils.errors import DomainError
from .graph import AgentGraph


@dataclass(frozen=True)
class NetworkEnergy:
    e_data: float
    e_interact: float
    e_prior: float
    total: float
    temperature: float = 1.0

    def __iter__(self):
        return iter((self.e_data, self.e_interact, self.e_prior, self.total))

    @property
    def gibbs_log_weight(self) -> float:
        """Unnormalised log-probability -E/T of the configuration."""
        return -self.total / self.temperature


def network_energy(g: AgentGraph, kT_temperature_scale: float = 1.0) -> NetworkEnergy:
    if not kT_temperature_scale > 0.0:
        raise DomainError(f"temperature must be positive, got {kT_temperature_scale}")
    e_data = math.fsum(gaussian_kl(a.belief, a.data_likelihood) for a in g.agents)
    e_prior = math.fsum(gaussian_kl(a.belief, a.prior) for a in g.agents)
    e_interact = math.fsum(
        p.psi * gaussian_fr_distance(g.agent(p.i).belief, g.agent(p.j).belief) ** 2 for p in g.potentials
    )
    return NetworkEnergy(e_data, e_interact, e_prior, e_data + e_interact + e_prior, kT_temperature_scale)
