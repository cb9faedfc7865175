import numpy as np
import pytest

from src.modules.core.errors import CtmError
from src.modules.core.fields import SpinorField
from src.modules.core.grid import Grid1D
from src.modules.core.tracks import ModelConfig, SolitonTrack
from src.modules.evolve.propagator import StepSettings
from src.modules.jost.builder import build_scattering_data
from src.modules.spectrum.discrete import DiscreteSpectrum
from src.modules.verify.bank import notch_factor, profile_bank, random_field, random_profile
from src.modules.verify.checks import CHECKS, Check, Outcome, _exit_time, _window_weighted_sup, check_residual
from src.modules.verify.context import SuiteContext
from src.modules.verify.suite import estimate_suite, run_check


class _Broken(CtmError):
    check_id = "jost.residual"


def _passing(ctx, rng):
    return Outcome(measured=float(rng.uniform(0.0, 0.5)), threshold=1.0, passed=True)


def _broken(ctx, rng):
    raise _Broken("table did not converge")


@pytest.fixture
def ctx(zero_pair, small_grid, small_lattice, test_logger) -> SuiteContext:
    return SuiteContext(config=zero_pair, grid=small_grid, lattice=small_lattice, data=(), spectra=(),
                        thresholds=(), logger=test_logger)


class TestRegistry:
    def test_known_checks_registered_in_order(self):
        ids = list(CHECKS)
        assert ids[0] == "scatter.unitarity"
        assert "decompose.contraction" in ids
        assert ids.index("freeflow.transition") == ids.index("freeflow.residual") + 1
        assert len(ids) == len(set(ids))

    def test_unknown_check_is_rejected(self, ctx):
        with pytest.raises(ValueError, match="unknown check"):
            estimate_suite(ctx, checks=["no.such.check"])


class TestRunCheck:
    def test_pipeline_error_becomes_failing_result(self, ctx):
        result = run_check(ctx, Check("test.broken", "never converges", _broken), seed=3)
        assert result.failed
        assert result.seed == 3
        assert result.detail == {"stage": "jost.residual"}
        assert "table did not converge" in result.error
        assert any("test.broken failed in jost.residual" in entry for entry in ctx.logger.get_logs())

    def test_seeded_runs_are_reproducible(self, ctx):
        check = Check("test.passing", "always passes", _passing)
        first = run_check(ctx, check, seed=1)
        again = run_check(ctx, check, seed=1)
        other = run_check(ctx, check, seed=2)
        assert first.measured == again.measured
        assert first.measured != other.measured


class TestEstimateSuite:
    def test_runs_every_check_per_seed(self, ctx, monkeypatch):
        monkeypatch.setitem(CHECKS, "test.passing", Check("test.passing", "always passes", _passing))
        monkeypatch.setitem(CHECKS, "test.broken", Check("test.broken", "never converges", _broken))
        report = estimate_suite(ctx, seeds=(0, 1), checks=["test.passing", "test.broken"], threads=2)
        assert [r.check_id for r in report.results] == ["test.passing"] * 2 + ["test.broken"] * 2
        assert [r.seed for r in report.results] == [0, 1, 0, 1]
        assert report.first_failure.check_id == "test.broken"
        assert report.model["n_k"] == ctx.lattice.n
        assert report.model["tracks"] == 2

    def test_empty_seed_list_falls_back_to_zero(self, ctx, monkeypatch):
        monkeypatch.setitem(CHECKS, "test.passing", Check("test.passing", "always passes", _passing))
        report = estimate_suite(ctx, seeds=(), checks=["test.passing"])
        assert report.seeds == (0,)
        assert report.passed


class TestBank:
    def test_bank_is_seeded(self, small_lattice):
        first = profile_bank(small_lattice, np.random.default_rng(5), 3)
        again = profile_bank(small_lattice, np.random.default_rng(5), 3)
        assert len(first) == 3
        assert all(np.array_equal(a.values, b.values) for a, b in zip(first, again))

    def test_random_field_lives_on_grid(self, small_grid, small_lattice):
        field = random_field(small_grid, small_lattice, np.random.default_rng(0))
        assert field.values.shape == (small_grid.n_x, 2)

    def test_notch_factor_has_double_zeros(self):
        k = np.array([0.0, 1e-3, 1.0])
        factor = notch_factor(k, [0.0], width=1.0)
        assert factor[0] == 0.0
        assert factor[1] == pytest.approx(1e-6, rel=1e-3)
        assert factor[2] == pytest.approx(1.0 - np.exp(-1.0))

    def test_notches_do_not_change_the_draws(self, small_lattice):
        plain = random_profile(small_lattice, np.random.default_rng(9))
        notched = random_profile(small_lattice, np.random.default_rng(9), notches=([0.0], [0.0]))
        weight = notch_factor(small_lattice.samples, [0.0])[:, None]
        assert np.allclose(notched.values, plain.values * weight)


class TestResidualCheck:
    """Transparent tracks leave only the discretization floor, which is not exponential decay."""

    @pytest.fixture
    def transparent(self, test_logger) -> SuiteContext:
        grid = Grid1D(-40.0, 40.0, 1024)
        lattice = grid.lattice(4.0)
        config = ModelConfig(tracks=(
            SolitonTrack(omega=1.0, v=2.0, y=5.0, gamma=0.0),
            SolitonTrack(omega=1.0, v=-2.0, y=-5.0, gamma=0.0),
        ))
        data = tuple(build_scattering_data(track, grid, lattice) for track in config.tracks)
        spectra = tuple(DiscreteSpectrum(track=track) for track in config.tracks)
        return SuiteContext(config=config, grid=grid, lattice=lattice, data=data, spectra=spectra,
                            thresholds=(None, None), logger=test_logger)

    def test_transparent_tracks_need_no_notches(self, transparent):
        assert not transparent.needs_notch(0)
        assert not transparent.needs_notch(1)

    def test_floor_alone_does_not_pass(self, transparent):
        outcome = check_residual(transparent, np.random.default_rng(1))
        assert not outcome.passed
        assert outcome.threshold == 10.0


class TestDecayWindow:
    grid = Grid1D(-40.0, 40.0, 1024)

    def test_exit_time_stops_short_of_the_sponge(self):
        config = ModelConfig(tracks=(
            SolitonTrack(omega=1.0, v=2.0, y=5.0, gamma=0.0),
            SolitonTrack(omega=1.0, v=0.0, y=0.0, gamma=0.0),
            SolitonTrack(omega=1.0, v=-2.0, y=-5.0, gamma=0.0),
        ))
        # inner sponge edge at 32, less the margin of 10
        assert _exit_time(config, self.grid, StepSettings(sponge=True)) == pytest.approx(8.5)

    def test_stationary_tracks_never_exit(self):
        config = ModelConfig(tracks=(SolitonTrack(omega=1.0, v=0.0, y=0.0, gamma=0.0),))
        assert _exit_time(config, self.grid, StepSettings(sponge=True)) == np.inf

    def test_weight_follows_the_track(self):
        config = ModelConfig(tracks=(SolitonTrack(omega=1.0, v=2.0, y=0.0, gamma=0.0),))
        values = np.zeros((self.grid.n_x, 2), dtype=complex)
        values[np.argmin(np.abs(self.grid.x - 2.5)), 0] = 1.0
        field = SpinorField(self.grid, values)
        assert _window_weighted_sup(field, config, 1.25) == pytest.approx(1.0)
        assert _window_weighted_sup(field, config, 0.0) == pytest.approx(1.0 / np.sqrt(7.25))
