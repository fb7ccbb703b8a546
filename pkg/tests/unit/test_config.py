import pytest

from beds_lab.cli.config import load_config, parse_config, render_config
from beds_lab.cli.schemas import DissipateParams, KIND_MODELS
from beds_lab.utils.errors import ConfigError

MINIMAL_DISSIPATE = """\
# comment
[dissipate]
seed = 3
tau0 = 10.0
kappa0 = 5.0
gamma = 0.5
gamma_kappa = 0.2
t_end = 1.0
dt = 0.1
"""


def _issues(text):
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    return info.value.issues


def test_minimal_dissipate_config():
    """Defaults fill everything not given; out_dir falls back to the settings directory."""
    cfg = parse_config(MINIMAL_DISSIPATE)
    assert cfg.kind == "dissipate"
    assert cfg.seed == 3
    assert isinstance(cfg.params, DissipateParams)
    assert cfg.params.tau0 == [10.0]
    assert cfg.params.mu0 is None
    assert cfg.params.record_every == 1
    assert cfg.params.thermal_energy() == 1.0
    assert cfg.out_dir.endswith("dissipate")


def test_lists_are_comma_separated():
    """tau0 = 1, 2 gives a two-factor state."""
    cfg = parse_config(MINIMAL_DISSIPATE.replace("tau0 = 10.0", "tau0 = 1.0, 2.0\nmu0 = 0, 0.5"))
    assert cfg.params.tau0 == [1.0, 2.0]
    assert cfg.params.mu0 == [0.0, 0.5]


def test_out_of_range_value_names_key_and_line():
    """gamma = -1 is reported against its own line."""
    issues = _issues(MINIMAL_DISSIPATE.replace("gamma = 0.5", "gamma = -1"))
    assert len(issues) == 1
    assert issues[0].key == "gamma"
    assert issues[0].line == 6
    assert "greater than or equal to 0" in issues[0].message


def test_duplicate_key_lists_both_lines():
    """The second occurrence is rejected."""
    issues = _issues(MINIMAL_DISSIPATE + "gamma = 0.7\n")
    assert any(i.key == "gamma" and "lines 6 and 10" in i.message for i in issues)


def test_unknown_kind_and_missing_header():
    """The header must name a known kind."""
    issues = _issues("[teleport]\nseed = 1\n")
    assert issues[0].key == "kind" and "unknown kind" in issues[0].message
    issues = _issues("seed = 1\n")
    assert any("before the [kind] header" in i.message for i in issues)
    assert any(i.message == "missing [kind] section header" for i in issues)


def test_unknown_and_missing_keys_are_all_reported():
    """Every problem in one pass, in line order."""
    text = "[geodesic]\nmu_a = 0\nwarp = 9\ntau_b = 1\n"
    issues = _issues(text)
    messages = {(i.key, i.message) for i in issues}
    assert ("warp", "unknown key") in messages
    assert ("tau_a", "missing required key") in messages
    assert ("mu_b", "missing required key") in messages
    lines = [i.line for i in issues]
    assert lines == sorted(lines)


def test_cross_field_rules():
    """dt beyond t_end and mismatched list lengths are keyed issues."""
    issues = _issues(MINIMAL_DISSIPATE.replace("dt = 0.1", "dt = 5.0"))
    assert issues[0].key == "dt" and issues[0].line == 9
    issues = _issues(MINIMAL_DISSIPATE + "mu0 = 1, 2\n")
    assert issues[0].key == "mu0" and "2 values" in issues[0].message


def test_network_timescale_rule():
    """potential_every must not exceed prune_every."""
    issues = _issues("[network]\npotential_every = 50\nprune_every = 10\n")
    assert issues[0].key == "prune_every"
    assert "timescale ordering" in issues[0].message


def test_physical_units_need_a_temperature():
    """units = physical converts kelvin to joules and requires temperature_kelvin."""
    issues = _issues("[bounds]\ngamma = 1\nunits = physical\n")
    assert issues[0].key == "temperature_kelvin"
    cfg = parse_config("[bounds]\ngamma = 1\nunits = physical\ntemperature_kelvin = 300\n")
    assert cfg.params.thermal_energy() == pytest.approx(4.14e-21, rel=1e-3)


def test_bad_seed_and_malformed_line():
    """Seeds are integers; every non-comment line is key = value."""
    issues = _issues("[gnc]\nseed = one\njust words\n")
    assert [i.line for i in issues] == [2, 3]


@pytest.mark.parametrize("kind", sorted(KIND_MODELS))
def test_bundled_scenarios_render_back(kind, scenario_dir):
    """Rendering a parsed config and parsing it again yields the same config."""
    cfg, _ = load_config(scenario_dir / f"{kind}.cfg")
    assert cfg.kind == kind
    again = parse_config(render_config(cfg))
    assert again == cfg
