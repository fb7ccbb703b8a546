from .energy import NetworkEnergy, network_energy
from .fusion import belief_round, fuse, fuse_terms, record_agreements
from .graph import (
    Agent,
    AgentGraph,
    Potential,
    agreement,
    complete_graph,
    edge_list_text,
    read_edge_list,
)
from .hierarchy import Hierarchy, MaintenanceBound, crystallize_level, total_maintenance_energy
from .learning import potential_update, prune_topology
from .runner import NetworkHistory, cluster_of, run_network, two_cluster_graph
from .topology import TopologyDiagnostics, topology_diagnostics
