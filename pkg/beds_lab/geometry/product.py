import math
from typing import TYPE_CHECKING

from ..utils.errors import DimensionError
from .fisher_rao import gaussian_fr_distance
from .von_mises import vonmises_fr_distance

if TYPE_CHECKING:
    from ..dynamics.state import BedsState


def spatial_distance_sq(a: "BedsState", b: "BedsState") -> float:
    if a.dim != b.dim:
        raise DimensionError(f"spatial dimension mismatch: {a.dim} vs {b.dim}")
    return math.fsum(gaussian_fr_distance(x, y) ** 2 for x, y in zip(a.spatial, b.spatial))


def beds_product_distance(a: "BedsState", b: "BedsState") -> float:
    """Product-manifold distance √(d_spatial² + d_temporal²); factors are uncoupled."""
    d_s2 = spatial_distance_sq(a, b)
    d_t = vonmises_fr_distance(a.temporal, b.temporal)
    return math.sqrt(d_s2 + d_t * d_t)
