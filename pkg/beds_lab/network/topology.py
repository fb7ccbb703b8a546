from collections import Counter
from dataclasses import dataclass
from typing import Dict

import numpy as np

from .graph import AgentGraph


@dataclass(frozen=True)
class TopologyDiagnostics:
    sparsity: float
    degree_histogram: Dict[int, int]
    mean_clustering: float


def adjacency(g: AgentGraph) -> np.ndarray:
    pos = {a.id: k for k, a in enumerate(g.agents)}
    adj = np.zeros((g.n, g.n), dtype=int)
    for p in g.potentials:
        adj[pos[p.i], pos[p.j]] = adj[pos[p.j], pos[p.i]] = 1
    return adj


def topology_diagnostics(g: AgentGraph) -> TopologyDiagnostics:
    """Edge density, degree histogram and average local clustering coefficient."""
    n = g.n
    if n < 2:
        return TopologyDiagnostics(0.0, {}, 0.0)
    adj = adjacency(g)
    degrees = adj.sum(axis=1)
    # closed triangles through each node are the diagonal of A³
    triangles = np.diag(adj @ adj @ adj) / 2.0
    pairs = degrees * (degrees - 1) / 2.0
    local = np.divide(triangles, pairs, out=np.zeros(n), where=pairs > 0)
    histogram = dict(sorted(Counter(int(d) for d in degrees).items()))
    return TopologyDiagnostics(g.edge_count / (n * (n - 1) / 2.0), histogram, float(local.mean()))
