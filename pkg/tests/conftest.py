import pathlib

import numpy as np
import pytest

from beds_lab.dynamics.state import BedsState
from beds_lab.utils.settings import get_settings

SCENARIO_DIR = pathlib.Path(__file__).resolve().parents[1] / "scenarios"


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Keep runs and the audit trail inside the test's tmp dir."""
    monkeypatch.delenv("BEDS_LAB_AUDIT_DB", raising=False)
    monkeypatch.setenv("BEDS_LAB_DEFAULT_OUT_DIR", str(tmp_path / "runs"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def out_dir(tmp_path):
    return tmp_path / "out"


@pytest.fixture
def scalar_state():
    return BedsState.scalar(mu=1.0, tau=4.0, phi=0.5, kappa=2.0)


@pytest.fixture
def write_config(tmp_path):
    """Write config text to a file and return its path."""
    def _write(text, name="scenario.cfg"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return _write


@pytest.fixture
def scenario_dir():
    return SCENARIO_DIR
