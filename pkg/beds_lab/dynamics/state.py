"""BEDS state, dissipation parameters, trajectories and taxonomy labels."""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import pandas as pd

from ..geometry.beliefs import GaussianBelief, VonMisesBelief
from ..utils.errors import DomainError
from .crystallization import DEFAULT_EPS, classify_regime, crystallization_index, mean_precision


@dataclass(frozen=True)
class BedsState:
    spatial: Tuple[GaussianBelief, ...]
    temporal: VonMisesBelief

    def __post_init__(self):
        spatial = tuple(self.spatial)
        if not spatial:
            raise DomainError("a BEDS state needs at least one spatial factor")
        object.__setattr__(self, "spatial", spatial)

    @classmethod
    def scalar(cls, mu: float, tau: float, phi: float = 0.0, kappa: float = 1.0) -> "BedsState":
        return cls((GaussianBelief(mu, tau),), VonMisesBelief(phi, kappa))

    @classmethod
    def from_arrays(cls, mus: Sequence[float], taus: Sequence[float], phi: float, kappa: float) -> "BedsState":
        if len(mus) != len(taus):
            raise DomainError(f"{len(mus)} means but {len(taus)} precisions")
        return cls(tuple(GaussianBelief(m, t) for m, t in zip(mus, taus)), VonMisesBelief(phi, kappa))

    @property
    def dim(self) -> int:
        return len(self.spatial)

    @property
    def mus(self) -> List[float]:
        return [b.mu for b in self.spatial]

    @property
    def taus(self) -> List[float]:
        return [b.tau for b in self.spatial]


@dataclass(frozen=True)
class DissipationParams:
    gamma: float = 0.0
    gamma_kappa: float = 0.0
    kT: float = 1.0

    def __post_init__(self):
        if not (self.gamma >= 0.0 and self.gamma_kappa >= 0.0):
            raise DomainError(f"dissipation rates must be >= 0, got ({self.gamma}, {self.gamma_kappa})")
        if not self.kT > 0.0:
            raise DomainError(f"kT must be positive, got {self.kT}")


def state_columns(dim: int) -> List[str]:
    if dim == 1:
        return ["mu", "tau"]
    return [f"mu_{i}" for i in range(dim)] + [f"tau_{i}" for i in range(dim)]


@dataclass
class Trajectory:
    """Time-indexed BEDS states with per-step crystallization diagnostics.

    ``extras`` carries optional per-step columns (loss terms, temperatures)
    that are appended after the standard ones when exported.
    """

    times: List[float] = field(default_factory=list)
    states: List[BedsState] = field(default_factory=list)
    diagnostics: List[Dict[str, object]] = field(default_factory=list)
    extras: List[Dict[str, float]] = field(default_factory=list)
    eps: float = DEFAULT_EPS

    def append(self, t: float, state: BedsState, **extra: float) -> None:
        if self.times and not t > self.times[-1]:
            raise DomainError(f"trajectory times must increase strictly ({t} after {self.times[-1]})")
        if self.states and state.dim != self.states[0].dim:
            raise DomainError("all states of a trajectory share one spatial dimension")
        C = crystallization_index(state)
        self.times.append(float(t))
        self.states.append(state)
        self.diagnostics.append({"C": C, "regime": classify_regime(C, self.eps).value})
        self.extras.append(dict(extra))

    def __len__(self) -> int:
        return len(self.states)

    @property
    def final(self) -> BedsState:
        return self.states[-1]

    def component_series(self, name: str) -> List[float]:
        """τ̄ (geometric-mean precision) or κ over time."""
        if name == "tau":
            return [mean_precision(s) for s in self.states]
        if name == "kappa":
            return [s.temporal.kappa for s in self.states]
        raise DomainError(f"unknown component {name!r}")

    def to_frame(self) -> pd.DataFrame:
        dim = self.states[0].dim if self.states else 1
        cols = ["t"] + state_columns(dim) + ["phi", "kappa", "C", "regime"]
        extra_cols: List[str] = []
        for e in self.extras:
            for k in e:
                if k not in extra_cols:
                    extra_cols.append(k)
        rows = []
        for t, s, d, e in zip(self.times, self.states, self.diagnostics, self.extras):
            rows.append(
                [t, *s.mus, *s.taus, s.temporal.phi, s.temporal.kappa, d["C"], d["regime"]]
                + [e.get(k, math.nan) for k in extra_cols]
            )
        return pd.DataFrame(rows, columns=cols + extra_cols)


class ComponentRegime(str, Enum):
    CRYSTALLIZABLE = "crystallizable"
    MAINTAINABLE = "maintainable"


class TaxonomyClass(str, Enum):
    C_TAU = "C-τ"
    C_KAPPA = "C-κ"
    C_FULL = "C-full"
    M_TAU = "M-τ"
    M_KAPPA = "M-κ"
    M_FULL = "M-full"


_ALLOWED = {
    (ComponentRegime.CRYSTALLIZABLE, ComponentRegime.CRYSTALLIZABLE): {TaxonomyClass.C_FULL},
    (ComponentRegime.MAINTAINABLE, ComponentRegime.MAINTAINABLE): {TaxonomyClass.M_FULL},
    (ComponentRegime.CRYSTALLIZABLE, ComponentRegime.MAINTAINABLE): {TaxonomyClass.C_TAU, TaxonomyClass.M_KAPPA},
    (ComponentRegime.MAINTAINABLE, ComponentRegime.CRYSTALLIZABLE): {TaxonomyClass.M_TAU, TaxonomyClass.C_KAPPA},
}


@dataclass(frozen=True)
class TaxonomyLabel:
    tau_regime: ComponentRegime
    kappa_regime: ComponentRegime
    cls: TaxonomyClass

    def __post_init__(self):
        object.__setattr__(self, "tau_regime", ComponentRegime(self.tau_regime))
        object.__setattr__(self, "kappa_regime", ComponentRegime(self.kappa_regime))
        object.__setattr__(self, "cls", TaxonomyClass(self.cls))
        if self.cls not in _ALLOWED[(self.tau_regime, self.kappa_regime)]:
            raise DomainError(
                f"class {self.cls.value} contradicts regimes (τ {self.tau_regime.value}, κ {self.kappa_regime.value})"
            )
