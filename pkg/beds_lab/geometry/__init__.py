from .beliefs import GaussianBelief, MetricTensor2, VonMisesBelief, phase_difference, wrap_phase
from .bessel import bessel_i0e, bessel_i1e, bessel_ratio, bessel_ratio_over_kappa
from .fisher_rao import (
    euclidean_path_efficiency,
    gaussian_fr_distance,
    gaussian_fr_distance_log,
    gaussian_geodesic,
    gaussian_kl,
    gaussian_metric,
    gaussian_metric_log,
    gaussian_path_length,
)
from .product import beds_product_distance, spatial_distance_sq
from .von_mises import vonmises_fr_distance, vonmises_kappa_length, vonmises_metric

__all__ = [
    "GaussianBelief",
    "VonMisesBelief",
    "MetricTensor2",
    "wrap_phase",
    "phase_difference",
    "bessel_ratio",
    "bessel_ratio_over_kappa",
    "bessel_i0e",
    "bessel_i1e",
    "gaussian_metric",
    "gaussian_metric_log",
    "gaussian_fr_distance",
    "gaussian_fr_distance_log",
    "gaussian_geodesic",
    "gaussian_kl",
    "gaussian_path_length",
    "euclidean_path_efficiency",
    "vonmises_metric",
    "vonmises_fr_distance",
    "vonmises_kappa_length",
    "beds_product_distance",
    "spatial_distance_sq",
]
