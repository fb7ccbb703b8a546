from .baselines import euclidean_fisher_ratio, ridge_loss, sigreg_gradient, sigreg_loss, sigreg_proxy
from .gnc import (
    GncSchedule,
    compare_gnc_schedules,
    coupled_schedule,
    double_well,
    effective_temperature,
    expected_derivatives,
    gnc_objective,
    independent_schedule,
    quadratic_bowl,
    run_gnc,
    smoothed_double_well,
)
from .loss import BedsGradient, BedsTarget, LossBreakdown, beds_loss, beds_loss_gradient, total_loss
from .optimizers import (
    gradient_step,
    natural_gradient_step,
    optimize,
    quadratic_data_objective,
    steps_to_threshold,
)
