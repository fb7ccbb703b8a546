from .crystallization import (
    CrystalFlag,
    Regime,
    classify_regime,
    crystallization_flags,
    crystallization_index,
    crystallization_series,
    mean_precision,
)
from .dissipation import crystallization_decay_rate, dissipate_closed_form, dissipate_rk4
from .mappings import ema_coherence, sac_coherence
from .state import (
    BedsState,
    ComponentRegime,
    DissipationParams,
    TaxonomyClass,
    TaxonomyLabel,
    Trajectory,
)
from .taxonomy import classify_trajectory, label_from_flags, synthetic_trajectory
from .thermo import (
    inefficiency_factors,
    landauer_cost,
    min_erasure_energy,
    min_information_rate,
    min_maintenance_power,
    rate_distortion_bits,
    thermal_energy,
    thermo_efficiency,
)
