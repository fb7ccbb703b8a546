import math

import numpy as np

from ..utils.errors import NumericFailure
from ..utils.logger import get_logger

logger = get_logger("numeric_guard")


def ensure_finite(values, context: str) -> None:
    """Raise NumericFailure if any metric or array entry is NaN or infinite."""
    if isinstance(values, dict):
        for key, v in values.items():
            ensure_finite(v, f"{context}.{key}")
        return
    if isinstance(values, (bool, str)) or values is None:
        return
    if isinstance(values, (int, float)):
        if not math.isfinite(values):
            logger.error(f"non-finite value in {context}: {values}")
            raise NumericFailure(f"non-finite value in {context}: {values}")
        return
    arr = np.asarray(values)
    if arr.dtype.kind in "fc" and not np.all(np.isfinite(arr)):
        raise NumericFailure(f"non-finite entries in {context}")
