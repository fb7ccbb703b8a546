import itertools
import math

import pytest

from beds_lab.geometry.beliefs import GaussianBelief
from beds_lab.network.energy import network_energy
from beds_lab.network.graph import Agent, AgentGraph, Potential
from beds_lab.utils.errors import DomainError


def test_consistent_network_has_zero_energy():
    """Beliefs equal to data, prior and each other cost nothing."""
    b = GaussianBelief(1.0, 2.0)
    g = AgentGraph(tuple(Agent(i, b, b, b) for i in range(3)), (Potential(0, 1, 1.0), Potential(1, 2, 1.0)))
    energy = network_energy(g)
    assert tuple(energy) == (0.0, 0.0, 0.0, 0.0)


def test_interaction_term_is_psi_times_squared_distance():
    """ψ = 2 and d_F = ½ give E_interact = ½."""
    a = GaussianBelief(0.0, 1.0)
    b = GaussianBelief(0.0, math.exp(0.5 * math.sqrt(2.0)))
    g = AgentGraph((Agent(0, a, a, a), Agent(1, b, b, b)), (Potential(0, 1, 2.0),))
    energy = network_energy(g)
    assert energy.e_interact == pytest.approx(0.5, rel=1e-12)
    assert energy.e_data == 0.0 and energy.e_prior == 0.0


def test_energy_terms_sum_to_total():
    """Data and prior terms are KL divergences to the agent's own factors."""
    belief = GaussianBelief(0.5, 1.0)
    agent = Agent(0, belief, GaussianBelief(0.0, 1.0), GaussianBelief(1.0, 1.0))
    energy = network_energy(AgentGraph((agent,)), kT_temperature_scale=2.0)
    assert energy.e_data == pytest.approx(0.125)
    assert energy.e_prior == pytest.approx(0.125)
    assert energy.total == pytest.approx(energy.e_data + energy.e_interact + energy.e_prior)
    assert energy.gibbs_log_weight == pytest.approx(-0.125)


def test_energy_is_invariant_under_relabelling():
    """Agent ids carry no energy."""
    agents = tuple(
        Agent(i, GaussianBelief(0.3 * i, 1.0 + i), GaussianBelief(0.0, 1.0), GaussianBelief(float(i), 2.0))
        for i in range(4)
    )
    g = AgentGraph(agents, (Potential(0, 1, 0.7), Potential(1, 3, 1.5), Potential(2, 3, 0.2)))
    relabelled = g.relabel({0: 10, 1: 4, 2: 7, 3: 0})
    assert network_energy(relabelled).total == pytest.approx(network_energy(g).total, rel=1e-12)


def test_energy_rejects_nonpositive_temperature():
    """Temperature scales the Gibbs weight and must be positive."""
    b = GaussianBelief(0.0, 1.0)
    with pytest.raises(DomainError, match="temperature must be positive"):
        network_energy(AgentGraph((Agent(0, b, b, b),)), 0.0)


def test_energy_vanishes_only_at_consensus_with_data():
    """Every 3-agent assignment over a coarse belief grid: all terms ≥ 0, total 0 iff everything agrees."""
    grid = (GaussianBelief(0.0, 1.0), GaussianBelief(1.0, 1.0), GaussianBelief(0.0, 2.0))
    edges = (Potential(0, 1, 0.5), Potential(0, 2, 0.5), Potential(1, 2, 0.5))
    for combo in itertools.product(grid, repeat=9):
        agents = tuple(Agent(i, combo[3 * i], combo[3 * i + 1], combo[3 * i + 2]) for i in range(3))
        energy = network_energy(AgentGraph(agents, edges))
        assert min(energy.e_data, energy.e_interact, energy.e_prior) >= 0.0
        if len(set(combo)) == 1:
            assert energy.total == 0.0
        else:
            assert energy.total > 1e-3
