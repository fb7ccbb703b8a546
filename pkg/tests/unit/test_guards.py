import math

import numpy as np
import pytest

from beds_lab.guards.config_guard import check_same_length, check_step, check_timescales, resolve_kT
from beds_lab.guards.numeric_guard import ensure_finite
from beds_lab.utils.errors import NumericFailure


def test_timescale_ordering():
    """Equal timescales pass; a slower potential update fails."""
    check_timescales(10, 10)
    with pytest.raises(ValueError, match="^prune_every: timescale ordering violated"):
        check_timescales(11, 10)


def test_step_and_length_rules():
    """Messages start with the offending key."""
    check_step(0.1, 1.0)
    with pytest.raises(ValueError, match="^dt: "):
        check_step(2.0, 1.0)
    with pytest.raises(ValueError, match="^mu0: 1 values but tau0 has 2"):
        check_same_length("tau0", [1, 2], "mu0", [0])


def test_resolve_kT():
    """Natural units pass kT through; physical units use k_B·T."""
    assert resolve_kT("natural", 2.5, None) == 2.5
    assert resolve_kT("physical", 1.0, 300.0) == pytest.approx(1.380649e-23 * 300.0)
    with pytest.raises(ValueError, match="^temperature_kelvin: required"):
        resolve_kT("physical", 1.0, None)
    with pytest.raises(ValueError, match="^units: "):
        resolve_kT("imperial", 1.0, None)


def test_ensure_finite_accepts_plain_metrics():
    """Strings, bools, None and finite numbers pass."""
    ensure_finite({"a": 1.0, "b": "fluid", "c": True, "d": None, "e": np.arange(3.0)}, "metrics")


@pytest.mark.parametrize("bad", [math.nan, math.inf, np.array([1.0, np.nan])])
def test_ensure_finite_rejects_non_finite(bad):
    """NaN or inf anywhere is a numeric failure naming the metric."""
    with pytest.raises(NumericFailure, match="metrics.x"):
        ensure_finite({"x": bad}, "metrics")
