"""Agents, pairwise potentials and the agent graph.

Graph values are immutable; every network operation returns a new graph.
"""
import math
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Tuple

from ..geometry.beliefs import GaussianBelief
from ..geometry.fisher_rao import gaussian_fr_distance
from ..utils.errors import DomainError

DEFAULT_HISTORY = 32


@dataclass(frozen=True)
class Agent:
    id: int
    belief: GaussianBelief
    prior: GaussianBelief
    data_likelihood: GaussianBelief


@dataclass(frozen=True)
class Potential:
    """Undirected coupling ψ_ij with a bounded agreement history.

    ``pending`` counts entries recorded since the last potential update.
    """

    i: int
    j: int
    psi: float
    history: Tuple[float, ...] = ()
    capacity: int = DEFAULT_HISTORY
    pending: int = 0

    def __post_init__(self):
        if self.i == self.j:
            raise DomainError(f"self-loop on agent {self.i}")
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)
        if not self.psi >= 0.0:
            raise DomainError(f"psi must be >= 0, got {self.psi}")
        if self.capacity < 1:
            raise DomainError("history capacity must be >= 1")
        object.__setattr__(self, "psi", float(self.psi))
        object.__setattr__(self, "history", tuple(self.history)[-self.capacity:])

    @property
    def key(self) -> Tuple[int, int]:
        return (self.i, self.j)

    def record(self, agreement: float) -> "Potential":
        return replace(self, history=(self.history + (agreement,))[-self.capacity:], pending=self.pending + 1)


def agreement(a: GaussianBelief, b: GaussianBelief) -> float:
    """exp(-d_F²): 1 for identical beliefs, towards 0 as they separate."""
    d = gaussian_fr_distance(a, b)
    return math.exp(-d * d)


@dataclass(frozen=True)
class AgentGraph:
    agents: Tuple[Agent, ...]
    potentials: Tuple[Potential, ...] = ()
    round: int = 0
    _index: Dict[int, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        agents = tuple(self.agents)
        potentials = tuple(sorted(self.potentials, key=lambda p: p.key))
        index = {}
        for pos, a in enumerate(agents):
            if a.id in index:
                raise DomainError(f"duplicate agent id {a.id}")
            index[a.id] = pos
        seen = set()
        for p in potentials:
            if p.i not in index or p.j not in index:
                raise DomainError(f"edge {p.key} references a missing agent")
            if p.key in seen:
                raise DomainError(f"duplicate edge {p.key}")
            seen.add(p.key)
        object.__setattr__(self, "agents", agents)
        object.__setattr__(self, "potentials", potentials)
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.agents)

    @property
    def edge_count(self) -> int:
        return len(self.potentials)

    def agent(self, agent_id: int) -> Agent:
        return self.agents[self._index[agent_id]]

    def neighbors(self, agent_id: int) -> List[Tuple[int, float]]:
        """(neighbour id, ψ) pairs sorted by neighbour id."""
        out = []
        for p in self.potentials:
            if p.i == agent_id:
                out.append((p.j, p.psi))
            elif p.j == agent_id:
                out.append((p.i, p.psi))
        return sorted(out)

    def with_agents(self, agents: Iterable[Agent]) -> "AgentGraph":
        return AgentGraph(tuple(agents), self.potentials, self.round)

    def with_potentials(self, potentials: Iterable[Potential]) -> "AgentGraph":
        return AgentGraph(self.agents, tuple(potentials), self.round)

    def relabel(self, mapping: Dict[int, int]) -> "AgentGraph":
        agents = [replace(a, id=mapping[a.id]) for a in self.agents]
        potentials = [replace(p, i=mapping[p.i], j=mapping[p.j]) for p in self.potentials]
        return AgentGraph(tuple(agents), tuple(potentials), self.round)


def complete_graph(agents: Iterable[Agent], psi0: float, capacity: int = DEFAULT_HISTORY) -> AgentGraph:
    """Fully connected graph; each edge history is seeded with the current agreement."""
    agents = tuple(agents)
    potentials = []
    for x in range(len(agents)):
        for y in range(x + 1, len(agents)):
            a, b = agents[x], agents[y]
            seed = agreement(a.belief, b.belief)
            potentials.append(Potential(a.id, b.id, psi0, (seed,), capacity))
    return AgentGraph(agents, tuple(potentials))


def edge_list_text(g: AgentGraph) -> str:
    """One "i j psi" line per edge, LF terminated."""
    return "".join(f"{p.i} {p.j} {p.psi!r}\n" for p in g.potentials)


def read_edge_list(text: str) -> List[Tuple[int, int, float]]:
    edges = []
    for line in text.splitlines():
        if not line.strip():
            continue
        i, j, psi = line.split()
        edges.append((int(i), int(j), float(psi)))
    return edges
