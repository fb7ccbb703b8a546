import json

import pytest

from beds_lab.cli.main import main
from beds_lab.cli.schemas import KIND_MODELS
from beds_lab.pipeline.pipeline import REPORT_NAME


@pytest.mark.parametrize("kind", sorted(KIND_MODELS))
def test_bundled_scenarios_succeed(kind, scenario_dir, tmp_path):
    """Every bundled config runs to completion with exit status 0."""
    out = tmp_path / kind
    code = main(["--config", str(scenario_dir / f"{kind}.cfg"), "--out-dir", str(out), "--quiet"])
    assert code == 0
    report = json.loads((out / REPORT_NAME).read_text(encoding="utf-8"))
    assert report["status"] == "ok"
    assert report["kind"] == kind
    for name in report["artifacts"]:
        assert (out / name).exists()


@pytest.mark.parametrize("kind", ["dissipate", "network", "optimize"])
def test_runs_are_byte_identical(kind, scenario_dir, tmp_path):
    """Same config and seed give byte-identical artifacts."""
    outputs = []
    for run in ("a", "b"):
        out = tmp_path / run
        assert main(["--config", str(scenario_dir / f"{kind}.cfg"), "--out-dir", str(out), "--quiet"]) == 0
        report = json.loads((out / REPORT_NAME).read_text(encoding="utf-8"))
        outputs.append({name: (out / name).read_bytes() for name in report["artifacts"]})
    assert outputs[0] == outputs[1]
    assert outputs[0]


def test_seed_override_is_recorded(scenario_dir, tmp_path):
    """--seed replaces the config seed in the report."""
    out = tmp_path / "seeded"
    assert main(["--config", str(scenario_dir / "bounds.cfg"), "--out-dir", str(out), "--seed", "42", "--quiet"]) == 0
    report = json.loads((out / REPORT_NAME).read_text(encoding="utf-8"))
    assert report["seed"] == 42
    assert report["config"]["seed"] == 42


def test_config_error_exit_code(write_config, tmp_path, capsys):
    """Invalid configs exit with 2 and describe every issue on stderr."""
    path = write_config("[dissipate]\ngamma = -1\n")
    code = main(["--config", str(path), "--out-dir", str(tmp_path / "never"), "--quiet"])
    assert code == 2
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["status"] == "error"
    assert err["error"]["type"] == "ConfigError"
    keys = {issue["key"] for issue in err["error"]["context"]["issues"]}
    assert "gamma" in keys and "tau0" in keys
    assert not (tmp_path / "never").exists()


def test_numeric_failure_exit_code(write_config, tmp_path):
    """A scenario that fails numerically still writes its report and exits with 3."""
    path = write_config("[bounds]\ngamma = 1\nr = 2.0\n")
    out = tmp_path / "diverging"
    assert main(["--config", str(path), "--out-dir", str(out), "--quiet"]) == 3
    report = json.loads((out / REPORT_NAME).read_text(encoding="utf-8"))
    assert report["error"]["exit_code"] == 3


def test_io_error_exit_codes(write_config, tmp_path):
    """A missing config or an unwritable output directory exits with 4."""
    assert main(["--config", str(tmp_path / "missing.cfg"), "--quiet"]) == 4
    blocker = tmp_path / "blocker"
    blocker.write_text("x")
    path = write_config("[bounds]\ngamma = 1\n")
    assert main(["--config", str(path), "--out-dir", str(blocker), "--quiet"]) == 4
