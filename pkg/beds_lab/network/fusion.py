"""Precision-weighted fusion and the synchronous belief round."""
from dataclasses import replace
from typing import Iterable, Optional, Sequence, Tuple

from ..geometry.beliefs import GaussianBelief
from ..utils.logger import get_logger
from .graph import AgentGraph, agreement

logger = get_logger("network.fusion")


def fuse(a: GaussianBelief, b: GaussianBelief) -> GaussianBelief:
    """Product of two Gaussian densities: precisions add, means combine precision-weighted."""
    tau = a.tau + b.tau
    return GaussianBelief((a.tau * a.mu + b.tau * b.mu) / tau, tau)


def fuse_terms(terms: Iterable[Tuple[float, float]]) -> GaussianBelief:
    """Fuse (mean, precision) pairs; zero-precision terms carry no information and are dropped."""
    tau = 0.0
    weighted = 0.0
    for mu, t in terms:
        if t > 0.0:
            tau += t
            weighted += t * mu
    return GaussianBelief(weighted / tau, tau)


def record_agreements(g: AgentGraph) -> AgentGraph:
    """Append exp(-d_F²) of the current beliefs to every edge history."""
    pots = [p.record(agreement(g.agent(p.i).belief, g.agent(p.j).belief)) for p in g.potentials]
    return g.with_potentials(pots)


def belief_round(g: AgentGraph, data: Optional[Sequence[GaussianBelief]] = None) -> AgentGraph:
    """One synchronous round of belief propagation.

    Each agent restarts from its prior precision centred on its previous mean,
    fuses its data likelihood and the neighbour messages (μ_j, ψ_ij·τ_data_j).
    Every read goes to the pre-round snapshot. ``data`` optionally replaces the
    agents' data likelihoods for this round (fresh observations).
    """
    likelihoods = [a.data_likelihood for a in g.agents] if data is None else list(data)
    by_id = {a.id: lik for a, lik in zip(g.agents, likelihoods)}

    new_agents = []
    for agent, lik in zip(g.agents, likelihoods):
        terms = [(agent.belief.mu, agent.prior.tau), (lik.mu, lik.tau)]
        for j, psi in g.neighbors(agent.id):
            terms.append((g.agent(j).belief.mu, psi * by_id[j].tau))
        new_agents.append(replace(agent, belief=fuse_terms(terms)))

    out = AgentGraph(tuple(new_agents), g.potentials, g.round + 1)
    out = record_agreements(out)
    logger.debug(f"belief round {out.round} complete ({out.n} agents, {out.edge_count} edges)")
    return out
