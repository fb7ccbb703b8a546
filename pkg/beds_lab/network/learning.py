"""Slow timescales: coupling updates from agreement, and pruning."""
from dataclasses import replace

import numpy as np

from ..utils.errors import DomainError, InsufficientHistory
from ..utils.logger import get_logger
from .graph import AgentGraph

logger = get_logger("network.learning")

BASELINE_MODES = ("running_mean",)


def potential_update(g: AgentGraph, eta_psi: float, baseline_mode: str = "running_mean") -> AgentGraph:
    """ψ_ij ← max(0, ψ_ij + η·(recent agreement - baseline)).

    Recent agreement is the mean of the entries recorded since the previous
    update; the baseline is the running mean of the edge's whole window.
    """
    if baseline_mode not in BASELINE_MODES:
        raise DomainError(f"unknown baseline mode {baseline_mode!r}")
    if eta_psi < 0.0:
        raise DomainError(f"eta_psi must be >= 0, got {eta_psi}")
    if eta_psi == 0.0:
        return g

    pots = []
    for p in g.potentials:
        if p.pending == 0 or not p.history:
            raise InsufficientHistory(f"edge {p.key} has no agreement recorded since the last update")
        hist = np.asarray(p.history)
        recent = float(np.mean(hist[-min(p.pending, len(hist)):]))
        baseline = float(np.mean(hist))
        psi = max(0.0, p.psi + eta_psi * (recent - baseline))
        pots.append(replace(p, psi=psi, pending=0))
    logger.debug(f"potential update at round {g.round}")
    return g.with_potentials(pots)


def prune_topology(g: AgentGraph, eps_prune: float) -> AgentGraph:
    """Drop every edge with ψ < eps_prune; agents are never removed."""
    if not eps_prune > 0.0:
        raise DomainError(f"eps_prune must be positive, got {eps_prune}")
    kept = [p for p in g.potentials if p.psi >= eps_prune]
    if len(kept) != g.edge_count:
        logger.info(f"✂️ pruned {g.edge_count - len(kept)} edges at round {g.round}")
    return g.with_potentials(kept)
