import pytest

from src.modules.cli.config import FreeflowConfig, InitKind, RunConfig
from src.modules.cli.errors import ConfigError
from src.modules.cli.validator import RunConfigValidator
from src.modules.core.profiles import ProfileKind
from src.modules.decompose.decomposition import PcMethod
from src.modules.verify.report.base import ReportSinkType

SMALL = """
tracks:
  - {omega: 1.0, v: 1.0, y: 5.0}
  - omega: 1.0
    v: -1.0
    y: -5.0
    gamma: 0.3
    profile: {kind: sech2, u_amplitude: -1.0, w_amplitude: 0.5}
numerics:
  x_min: -20.0
  x_max: 20.0
  n_x: 512
  k_max: 8.0
  t_final: 1.0
freeflow:
  packets:
    - {center: 0.5, width: 0.5}
    - {center: -0.5, width: 0.5, component: 2, amplitude: 0.5}
"""


@pytest.fixture
def config() -> RunConfig:
    return RunConfigValidator.validate_and_load(SMALL)


class TestRunConfig:
    def test_defaults(self, config):
        assert config.output.sinks == [ReportSinkType.JSON]
        assert config.output.cache_dir is None
        assert config.evolve.init == InitKind.S0_PROFILE
        assert config.decompose.method == PcMethod.HARDY
        assert config.verify.seeds == [0]

    def test_to_model(self, config):
        model = config.to_model()
        assert model.m == 2
        assert model.t_final == 1.0
        assert model.tracks[0].profile.is_zero
        assert model.tracks[1].profile.kind == ProfileKind.SECH2
        assert model.tracks[1].gamma == 0.3

    def test_settings(self, config):
        assert config.step_settings().k_max == config.numerics.k_resolve
        assert config.step_settings().growth_limit == config.numerics.tolerances.growth
        assert config.jost_settings().k_floor == config.numerics.k_floor
        assert config.decomposition_settings(threads=3).threads == 3
        times = config.record_times()
        assert len(times) == config.evolve.records
        assert times[0] == 0.0
        assert times[-1] == pytest.approx(1.0)

    def test_packets_become_profile(self, config):
        lattice = config.numerics.lattice()
        profile = config.freeflow.profile(lattice)
        assert profile.values.shape == (lattice.n, 2)
        assert abs(profile.values[:, 0]).max() > abs(profile.values[:, 1]).max()

    def test_no_packets_no_profile(self, config):
        assert FreeflowConfig().profile(config.numerics.lattice()) is None


class TestRunConfigValidator:
    def test_unknown_key_is_rejected(self):
        with pytest.raises(ConfigError) as info:
            RunConfigValidator.validate_and_load(SMALL + "\ntolerance: 1e-3\n")
        assert "tolerance" in str(info.value)
        assert info.value.check_id == "cli.config"

    def test_misspelled_tolerance_is_rejected(self):
        bad = SMALL.replace("  t_final: 1.0\n", "  t_final: 1.0\n  tolerances: {unitarty: 1e-6}\n")
        with pytest.raises(ConfigError, match="unitarty"):
            RunConfigValidator.validate_and_load(bad)

    def test_bad_yaml_reports_line(self):
        with pytest.raises(ConfigError, match="line"):
            RunConfigValidator.validate_and_load("tracks:\n  - {omega: 1.0\n")

    def test_tracks_are_required(self):
        with pytest.raises(ConfigError, match="tracks"):
            RunConfigValidator.validate_and_load("numerics: {n_x: 512}\n")

    def test_empty_document(self):
        with pytest.raises(ConfigError, match="mapping"):
            RunConfigValidator.validate_and_load("")

    def test_grid_must_be_power_of_two(self):
        with pytest.raises(ConfigError, match="power of two"):
            RunConfigValidator.validate_and_load(SMALL.replace("n_x: 512", "n_x: 500"))

    def test_box_must_hold_the_tracks(self):
        with pytest.raises(ConfigError, match="box length"):
            RunConfigValidator.validate_and_load(SMALL.replace("t_final: 1.0", "t_final: 20.0"))

    def test_positive_omega(self):
        with pytest.raises(ConfigError, match="omega"):
            RunConfigValidator.validate_and_load(SMALL.replace("{omega: 1.0, v: 1.0", "{omega: -1.0, v: 1.0"))

    def test_field_file_init_needs_path(self):
        with pytest.raises(ConfigError, match="field_file"):
            RunConfigValidator.validate_and_load(SMALL + "evolve: {init: field_file}\n")

    def test_mode_track_in_range(self):
        with pytest.raises(ConfigError, match="evolve.track"):
            RunConfigValidator.validate_and_load(SMALL + "evolve: {init: boosted_mode, track: 2}\n")

    def test_unknown_sink(self):
        with pytest.raises(ConfigError, match="sinks"):
            RunConfigValidator.validate_and_load(SMALL + "output: {sinks: [statsd]}\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="Cannot read"):
            RunConfigValidator.load(tmp_path / "absent.yaml")

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text(SMALL)
        assert RunConfigValidator.load(path).numerics.n_x == 512
