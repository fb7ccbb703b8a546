"""Per-kind scenario parameters and the run report."""
from typing import Any, ClassVar, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..guards.config_guard import check_same_length, check_step, check_timescales, resolve_kT

SCHEMA_VERSION = 1


def _split_list(v):
    if isinstance(v, str):
        return [item.strip() for item in v.split(",") if item.strip()]
    if isinstance(v, (int, float)):
        return [v]
    return v


class KindParams(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    # list-valued keys, comma separated in the config file
    LIST_FIELDS: ClassVar[tuple] = ()

    @field_validator("*", mode="before")
    @classmethod
    def _lists(cls, v, info):
        if info.field_name in cls.LIST_FIELDS:
            return _split_list(v)
        return v


class ThermalParams(KindParams):
    units: Literal["natural", "physical"] = "natural"
    kT: float = Field(default=1.0, gt=0)
    temperature_kelvin: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _units(self):
        resolve_kT(self.units, self.kT, self.temperature_kelvin)
        return self

    def thermal_energy(self) -> float:
        return resolve_kT(self.units, self.kT, self.temperature_kelvin)


class GeodesicParams(KindParams):
    mu_a: float
    tau_a: float = Field(gt=0)
    mu_b: float
    tau_b: float = Field(gt=0)
    phi_a: float = 0.0
    kappa_a: float = Field(default=1.0, ge=0)
    phi_b: float = 0.0
    kappa_b: float = Field(default=1.0, ge=0)
    samples: int = Field(default=11, ge=2)


class DissipateParams(ThermalParams):
    LIST_FIELDS: ClassVar[tuple] = ("mu0", "tau0")

    mu0: Optional[List[float]] = None
    tau0: List[float]
    phi0: float = 0.0
    kappa0: float = Field(ge=0)
    gamma: float = Field(ge=0)
    gamma_kappa: float = Field(ge=0)
    t_end: float = Field(gt=0)
    dt: float = Field(gt=0)
    record_every: int = Field(default=1, ge=1)
    eps: float = Field(default=0.1, gt=0, lt=1)
    tau_crit: Optional[float] = Field(default=None, gt=0)
    kappa_crit: Optional[float] = Field(default=None, gt=0)

    @field_validator("tau0")
    @classmethod
    def _positive_tau(cls, v):
        if not v or any(t <= 0 for t in v):
            raise ValueError("tau0: precisions must be positive")
        return v

    @model_validator(mode="after")
    def _shape(self):
        if self.mu0 is not None:
            check_same_length("tau0", self.tau0, "mu0", self.mu0)
        check_step(self.dt, self.t_end)
        return self


class OptimizeParams(KindParams):
    LIST_FIELDS: ClassVar[tuple] = ("mu0", "tau0", "mu_star", "tau_star", "data_mu")

    mu0: List[float]
    tau0: List[float]
    phi0: float = 0.0
    kappa0: float = Field(default=1.0, gt=0)
    mu_star: List[float]
    tau_star: List[float]
    phi_star: float = 0.0
    kappa_star: float = Field(default=1.0, gt=0)
    lam: float = Field(default=1.0, gt=0)
    eta: float = Field(default=0.05, gt=0)
    steps: int = Field(default=500, ge=1)
    method: Literal["plain", "natural"] = "natural"
    data_weight: float = Field(default=0.0, ge=0)
    data_mu: Optional[List[float]] = None
    threshold: float = Field(default=0.01, gt=0)

    @model_validator(mode="after")
    def _shape(self):
        check_same_length("mu0", self.mu0, "tau0", self.tau0)
        check_same_length("mu0", self.mu0, "mu_star", self.mu_star)
        check_same_length("mu0", self.mu0, "tau_star", self.tau_star)
        if self.data_mu is not None:
            check_same_length("mu0", self.mu0, "data_mu", self.data_mu)
        if any(t <= 0 for t in self.tau0 + self.tau_star):
            raise ValueError("tau0: precisions must be positive")
        return self


class GncParams(KindParams):
    init_mu: float = 0.5
    init_tau: float = Field(default=1.0, gt=0)
    prior_mu: float = 0.5
    prior_tau: float = Field(default=1.0, gt=0)
    schedule: Literal["coupled", "independent", "fixed"] = "coupled"
    stages: int = Field(default=21, ge=2)
    steps_per_stage: int = Field(default=100, ge=1)
    beta_start: float = Field(default=0.01, gt=0)
    beta_end: float = Field(default=0.05, gt=0)
    alpha: float = Field(default=1.0, ge=0, le=1)
    smoothing: float = Field(default=1.0, ge=0)
    rho: float = Field(default=0.1, gt=0, le=1)
    compare: bool = False


class NetworkParams(KindParams):
    LIST_FIELDS: ClassVar[tuple] = ("means",)

    cluster_size: int = Field(default=3, ge=1)
    means: List[float] = Field(default_factory=lambda: [-5.0, 5.0])
    data_tau: float = Field(default=1.0, gt=0)
    prior_tau: float = Field(default=1.0, gt=0)
    prior_mu: float = 0.0
    psi0: float = Field(default=0.5, ge=0)
    rounds: int = Field(default=400, ge=0)
    potential_every: int = Field(default=5, ge=1)
    prune_every: int = Field(default=100, ge=1)
    eta_psi: float = Field(default=2.0, ge=0)
    eps_prune: float = Field(default=0.05, gt=0)
    obs_noise: float = Field(default=0.0, ge=0)
    history: int = Field(default=32, ge=1)
    temperature: float = Field(default=1.0, gt=0)

    @model_validator(mode="after")
    def _timescales(self):
        check_timescales(self.potential_every, self.prune_every)
        return self


class TaxonomyParams(KindParams):
    tau_pattern: Literal["constant", "oscillating", "drifting"] = "constant"
    kappa_pattern: Literal["constant", "oscillating", "drifting"] = "constant"
    n: int = Field(default=200, ge=4)
    dt: float = Field(default=0.1, gt=0)
    tau_level: float = Field(default=1.0, gt=0)
    kappa_level: float = Field(default=1.0, gt=0)
    tau_amplitude: float = Field(default=0.5, ge=0, lt=1)
    kappa_amplitude: float = Field(default=0.5, ge=0, lt=1)
    period: float = Field(default=6.283185307179586, gt=0)
    window: int = Field(default=50, ge=2)
    tol: float = Field(default=1e-3, gt=0)
    dominance: float = Field(default=0.1, gt=0)


class BoundsParams(ThermalParams):
    gamma: float = Field(ge=0)
    tau_star: float = Field(default=1.0, gt=0)
    bits: float = Field(default=1.0, ge=0)
    E_actual: Optional[float] = Field(default=None, gt=0)
    r: float = Field(default=0.5, gt=0)
    E0: float = Field(default=1.0, gt=0)
    n_levels: int = Field(default=20, ge=1)
    source_variance: Optional[float] = Field(default=None, gt=0)
    distortion: Optional[float] = Field(default=None, gt=0)
    hardware_overhead: float = Field(default=1.0, ge=1)
    algorithmic_overhead: float = Field(default=1.0, ge=1)
    dissipative_overhead: float = Field(default=1.0, ge=1)


KIND_MODELS = {
    "geodesic": GeodesicParams,
    "dissipate": DissipateParams,
    "optimize": OptimizeParams,
    "gnc": GncParams,
    "network": NetworkParams,
    "taxonomy": TaxonomyParams,
    "bounds": BoundsParams,
}


class ErrorEntry(BaseModel):
    type: str
    message: str
    exit_code: int
    context: Dict[str, Any] = Field(default_factory=dict)


class RunReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    kind: str
    status: Literal["ok", "error"] = "ok"
    seed: int
    config: Dict[str, Any]
    metrics: Dict[str, Any] = Field(default_factory=dict)
    artifacts: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    wall_time_s: float = 0.0
    created_at: str
    error: Optional[ErrorEntry] = None

    @property
    def exit_code(self) -> int:
        return 0 if self.error is None else self.error.exit_code
