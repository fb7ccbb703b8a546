"""Three-timescale network runs: beliefs every round, couplings and topology slower."""
from dataclasses import dataclass, field
from typing import List, Sequence

import pandas as pd

from ..geometry.beliefs import GaussianBelief
from ..utils.cache import stream_rng
from ..utils.errors import ConfigError, ConfigIssue, DomainError
from ..utils.logger import get_logger
from .energy import NetworkEnergy, network_energy
from .fusion import belief_round
from .graph import DEFAULT_HISTORY, Agent, AgentGraph, complete_graph
from .learning import potential_update, prune_topology

logger = get_logger("network.runner")


@dataclass(frozen=True)
class NetworkSnapshot:
    round: int
    energy: NetworkEnergy
    edge_count: int
    beliefs: tuple


@dataclass
class NetworkHistory:
    snapshots: List[NetworkSnapshot] = field(default_factory=list)
    initial_graph: AgentGraph = None
    final_graph: AgentGraph = None

    def to_frame(self) -> pd.DataFrame:
        ids = [a.id for a in self.initial_graph.agents]
        cols = ["round", "E_data", "E_interact", "E_prior", "E_total", "edge_count"]
        cols += [f"mu_{i}" for i in ids] + [f"tau_{i}" for i in ids]
        rows = []
        for s in self.snapshots:
            e = s.energy
            rows.append(
                [s.round, e.e_data, e.e_interact, e.e_prior, e.total, s.edge_count]
                + [b.mu for b in s.beliefs]
                + [b.tau for b in s.beliefs]
            )
        return pd.DataFrame(rows, columns=cols)


def _snapshot(g: AgentGraph, temperature: float) -> NetworkSnapshot:
    return NetworkSnapshot(g.round, network_energy(g, temperature), g.edge_count, tuple(a.belief for a in g.agents))


def run_network(
    g: AgentGraph,
    rounds: int,
    potential_every: int,
    prune_every: int,
    seed: int,
    eta_psi: float = 2.0,
    eps_prune: float = 0.05,
    obs_noise: float = 0.0,
    temperature: float = 1.0,
) -> NetworkHistory:
    """Interleave belief rounds, potential updates and pruning.

    With ``obs_noise`` > 0 every round draws fresh observations around each
    agent's data mean from the seeded "network/observations" stream.
    """
    issues = []
    if rounds < 0:
        issues.append(ConfigIssue(None, "rounds", "must be >= 0"))
    if potential_every < 1 or prune_every < 1:
        issues.append(ConfigIssue(None, "potential_every", "timescales must be positive integers"))
    elif potential_every > prune_every:
        issues.append(ConfigIssue(None, "prune_every", f"potential_every ({potential_every}) must not exceed prune_every ({prune_every})"))
    if obs_noise < 0.0:
        issues.append(ConfigIssue(None, "obs_noise", "must be >= 0"))
    if issues:
        raise ConfigError(issues)

    rng = stream_rng(seed, "network/observations")
    history = NetworkHistory(initial_graph=g)
    history.snapshots.append(_snapshot(g, temperature))
    for r in range(1, rounds + 1):
        data = None
        if obs_noise > 0.0:
            noise = rng.standard_normal(g.n)
            data = [
                GaussianBelief(a.data_likelihood.mu + obs_noise * z, a.data_likelihood.tau)
                for a, z in zip(g.agents, noise)
            ]
        g = belief_round(g, data)
        if r % potential_every == 0:
            g = potential_update(g, eta_psi)
        if r % prune_every == 0:
            g = prune_topology(g, eps_prune)
        history.snapshots.append(_snapshot(g, temperature))
    history.final_graph = g
    logger.info(f"🕸️ network run: {rounds} rounds, {history.initial_graph.edge_count} → {g.edge_count} edges")
    return history


def two_cluster_graph(
    cluster_size: int = 3,
    means: Sequence[float] = (-5.0, 5.0),
    data_tau: float = 1.0,
    prior_tau: float = 1.0,
    prior_mu: float = 0.0,
    psi0: float = 0.5,
    history: int = DEFAULT_HISTORY,
) -> AgentGraph:
    """Fully connected clusters of agents observing different means; beliefs start at the prior."""
    if cluster_size < 1:
        raise DomainError("cluster_size must be >= 1")
    agents = []
    for c, mean in enumerate(means):
        for k in range(cluster_size):
            prior = GaussianBelief(prior_mu, prior_tau)
            agents.append(Agent(c * cluster_size + k, prior, prior, GaussianBelief(mean, data_tau)))
    return complete_graph(agents, psi0, history)


def cluster_of(agent_id: int, cluster_size: int) -> int:
    return agent_id // cluster_size
