import json
from dataclasses import replace

import pandas as pd
import pytest

from beds_lab.cli.config import load_config, parse_config
from beds_lab.pipeline.pipeline import REPORT_NAME, plan_scenario, run_scenario
from beds_lab.utils.errors import ArtifactIOError


def _scenario(scenario_dir, kind, out_dir):
    cfg, _ = load_config(scenario_dir / f"{kind}.cfg")
    return replace(cfg, out_dir=str(out_dir))


def _report(out_dir):
    return json.loads((out_dir / REPORT_NAME).read_text(encoding="utf-8"))


def test_plan_lists_steps(scenario_dir, out_dir):
    """Plans run, persist and report in that order."""
    plan = plan_scenario(_scenario(scenario_dir, "bounds", out_dir))
    assert plan.steps == ["run", "write_artifacts", "report"]
    assert plan.out_dir == str(out_dir)


def test_dissipate_scenario(scenario_dir, out_dir):
    """Trajectory CSV with the standard header; the run report lists it."""
    report = run_scenario(_scenario(scenario_dir, "dissipate", out_dir))
    assert report.status == "ok" and report.exit_code == 0
    header = (out_dir / "trajectory.csv").read_text(encoding="utf-8").splitlines()[0]
    assert header == "t,mu,tau,phi,kappa,C,regime"
    assert report.artifacts == ["trajectory.csv"]
    assert report.metrics["closed_form_rel_error"] < 1e-8
    assert report.metrics["decay_rate"] == pytest.approx(1.2)

    payload = _report(out_dir)
    assert payload["schema_version"] == 1
    assert payload["config"]["kind"] == "dissipate"
    assert payload["error"] is None


def test_taxonomy_scenario(scenario_dir, out_dir):
    """Two oscillating components are maintainable."""
    report = run_scenario(_scenario(scenario_dir, "taxonomy", out_dir))
    assert report.metrics["cls"] == "M-full"


def test_bounds_scenario(scenario_dir, out_dir):
    """γ = 2, τ* = 1, kT = 1 needs unit power; no artifacts beyond the report."""
    report = run_scenario(_scenario(scenario_dir, "bounds", out_dir))
    assert report.metrics["p_min"] == 1.0
    assert report.metrics["thermo_efficiency"] == pytest.approx(0.5 * 0.6931471805599453)
    assert report.metrics["rate_distortion_bits"] == pytest.approx(1.0)
    assert report.metrics["hierarchy_bounded"] is True
    assert report.artifacts == []
    assert (out_dir / REPORT_NAME).exists()


def test_geodesic_scenario(scenario_dir, out_dir):
    """Geodesic samples start at a and end at b."""
    run_scenario(_scenario(scenario_dir, "geodesic", out_dir))
    frame = pd.read_csv(out_dir / "geodesic.csv")
    assert len(frame) == 21
    assert frame["mu"].iloc[0] == pytest.approx(0.0, abs=1e-12)
    assert frame["tau"].iloc[-1] == pytest.approx(4.0)
    assert frame["d_from_a"].is_monotonic_increasing


def test_network_scenario_writes_edge_lists(scenario_dir, out_dir):
    """Initial and final graphs are written next to the round table."""
    report = run_scenario(_scenario(scenario_dir, "network", out_dir))
    assert sorted(report.artifacts) == ["graph_final.txt", "graph_initial.txt", "network.csv"]
    assert report.metrics["inter_cluster_edges"] == 0
    assert report.notes and report.notes[0].startswith("deviation")


def test_scenario_failure_is_reported(out_dir):
    """A diverging hierarchy becomes an error entry with the numeric exit code."""
    cfg = replace(parse_config("[bounds]\ngamma = 1\nr = 1.5\n"), out_dir=str(out_dir))
    report = run_scenario(cfg)
    assert report.status == "error"
    assert report.exit_code == 3
    assert report.error.type == "DivergenceError"
    assert report.error.context == {"kind": "bounds", "seed": 0}
    assert report.metrics == {}
    assert _report(out_dir)["status"] == "error"


def test_physical_violation_is_reported(out_dir):
    """Energy below the Landauer floor fails the run."""
    cfg = replace(parse_config("[bounds]\ngamma = 1\nE_actual = 0.1\n"), out_dir=str(out_dir))
    report = run_scenario(cfg)
    assert report.error.type == "PhysicalViolation"


def test_unwritable_out_dir_escapes(tmp_path, scenario_dir):
    """When not even the report can be written the I/O error propagates."""
    blocker = tmp_path / "blocker"
    blocker.write_text("x")
    with pytest.raises(ArtifactIOError):
        run_scenario(_scenario(scenario_dir, "bounds", blocker))
