import numpy as np
import pytest

from src.modules.core.galilei import free_evolve
from src.modules.core.grid import Grid1D
from src.modules.core.norms import l2_norm
from src.modules.core.profiles import PotentialProfile, ProfileKind
from src.modules.core.tracks import ModelConfig, SolitonTrack
from src.modules.dft.flat import flat_F0
from src.modules.dft.frequency import FrequencyPair, gaussian_packet
from src.modules.freeflow.approximant import (
    coercivity_ratio,
    eval_S,
    evolve_frequency,
    localization_defect,
    residual_of_S,
    transition_defect,
)
from src.modules.freeflow.profiles import (
    boost,
    inverse_recursion_step,
    recurse_profiles,
    recursion_defect,
    recursion_step,
    threshold_frequencies,
    unboost,
)
from src.modules.jost.builder import build_scattering_data
from src.modules.jost.data import ScatteringData
from src.modules.verify.bank import random_profile


@pytest.fixture
def phi(small_lattice) -> FrequencyPair:
    values = np.stack([
        gaussian_packet(small_lattice, 0.5, 0.5, position=1.0),
        gaussian_packet(small_lattice, -0.5, 0.5, amplitude=0.5),
    ], axis=-1)
    return FrequencyPair(small_lattice, values)


@pytest.fixture
def zero_tables(zero_pair, small_grid, small_lattice):
    return [build_scattering_data(track, small_grid, small_lattice) for track in zero_pair.tracks]


@pytest.fixture
def family(phi, zero_pair, zero_tables):
    return recurse_profiles(phi, zero_pair, zero_tables)


class TestRecursion:
    """Profile recursion through transparent potentials."""

    def test_profiles_pass_unchanged(self, family, phi):
        assert family.m == 2
        assert (family.per_ell[1] - phi).norm() < 1e-8 * phi.norm()
        assert (family.aggregate - phi).norm() == 0.0

    def test_recursion_is_consistent(self, family):
        assert recursion_defect(family) < 1e-12

    def test_inverse_step(self, phi, zero_pair, zero_tables):
        track, data = zero_pair.tracks[1], zero_tables[1]
        forward = recursion_step(phi, track, data)
        assert (inverse_recursion_step(forward, track, data) - phi).norm() < 1e-8 * phi.norm()

    def test_boost_round_trip(self, phi, zero_pair, zero_tables):
        track, data = zero_pair.tracks[0], zero_tables[0]
        assert (unboost(boost(phi, track, data), track, data) - phi).norm() < 1e-8 * phi.norm()

    def test_table_count_must_match(self, phi, zero_pair, zero_tables):
        with pytest.raises(ValueError):
            recurse_profiles(phi, zero_pair, zero_tables[:1])


class TestApproximant:
    """Without potentials S(t) phi is the free flow of F0 phi."""

    def test_reduces_to_free_flow(self, family, phi, small_grid):
        for t in (0.0, 0.5, 1.0):
            expected = flat_F0(evolve_frequency(phi, t), small_grid)
            assert l2_norm(eval_S(family, t) - expected) < 1e-6 * l2_norm(expected)

    def test_matches_grid_free_evolution(self, family, phi, small_grid):
        expected = free_evolve(flat_F0(phi, small_grid), 0.8)
        assert l2_norm(eval_S(family, 0.8) - expected) < 1e-6 * l2_norm(expected)

    def test_residual_is_at_the_discretization_floor(self, family):
        sample = residual_of_S(family, 0.5)
        assert sample.relative < 1e-5
        assert sample.size > 0.0

    def test_transition_is_seamless(self, family):
        assert transition_defect(family, 1) < 1e-8

    def test_transition_index_range(self, family):
        with pytest.raises(ValueError):
            transition_defect(family, 0)

    def test_coercivity_ratio(self, family):
        assert coercivity_ratio(family) == pytest.approx(0.5, rel=1e-6)

    def test_localization_defect_per_track(self, family):
        defects = localization_defect(family, 0.0, 1.0)
        assert len(defects) == 2
        assert all(d >= 0.0 for d in defects)


def _coefficient_table(track, grid, lattice, s, r) -> ScatteringData:
    """Coefficient table without Jost solutions, for the purely algebraic steps."""
    n_k = lattice.n
    zeros = np.zeros((n_k, grid.n_x, 2))
    return ScatteringData(track=track.at_rest(), grid=grid, lattice=lattice,
                          s=np.broadcast_to(s, (n_k,)), r=np.broadcast_to(r, (n_k,)), jost_F=zeros, jost_G=zeros)


def _gaussian(k, centre, width, position):
    return np.exp(-((k - centre) ** 2) / (2.0 * width ** 2) - 1j * k * position)


class TestRecursionFormula:
    """The step written out in lab frequencies, checked against coefficient tables with closed forms."""

    track = SolitonTrack(omega=1.0, v=2.0, y=3.0, gamma=0.4)
    packets = ((0.5, 0.8, 1.0), (-0.5, 0.8, -1.0))

    def _phi(self, lattice) -> FrequencyPair:
        k = lattice.samples
        return FrequencyPair(lattice, np.stack([_gaussian(k, *p) for p in self.packets], axis=-1))

    def test_pure_phase_transmission_is_divided_out(self, small_grid, small_lattice):
        k = small_lattice.samples
        data = _coefficient_table(self.track, small_grid, small_lattice, np.exp(0.7j * k), 0.0)
        phi = self._phi(small_lattice)
        stepped = recursion_step(phi, self.track, data)
        half = self.track.v / 2.0
        expected = np.stack([
            phi.values[:, 0] * np.exp(-0.7j * (k - half)),
            phi.values[:, 1] * np.exp(-0.7j * (k + half)),
        ], axis=-1)
        assert np.linalg.norm(stepped.values - expected) < 1e-8 * np.linalg.norm(expected)
        assert stepped.norm() == pytest.approx(phi.norm(), rel=1e-8)

    def test_reflection_enters_through_the_mirrored_profile(self, small_grid, small_lattice):
        s, r = 0.8, 0.6j
        data = _coefficient_table(self.track, small_grid, small_lattice, s, r)
        phi = self._phi(small_lattice)
        stepped = recursion_step(phi, self.track, data)
        k = small_lattice.samples
        v, y = self.track.v, self.track.y
        first = (_gaussian(k, *self.packets[0])
                 - r * np.exp(-2j * y * (k - v / 2.0)) * _gaussian(v - k, *self.packets[0])) / s
        second = (_gaussian(k, *self.packets[1])
                  - r * np.exp(-2j * y * (k + v / 2.0)) * _gaussian(-k - v, *self.packets[1])) / s
        expected = np.stack([first, second], axis=-1)
        assert np.linalg.norm(stepped.values - expected) < 1e-8 * np.linalg.norm(expected)

    def test_inverse_undoes_a_reflecting_step(self, small_grid, small_lattice):
        data = _coefficient_table(self.track, small_grid, small_lattice, 0.8, 0.6j)
        phi = self._phi(small_lattice)
        back = inverse_recursion_step(recursion_step(phi, self.track, data), self.track, data)
        assert (back - phi).norm() < 1e-8 * phi.norm()


class TestThresholdFrequencies:
    """Zeros a seed needs so that no step divides by a vanishing transmission."""

    def _config(self, sech2_profile, middle: PotentialProfile) -> ModelConfig:
        return ModelConfig(tracks=(
            SolitonTrack(omega=1.0, v=4.0, y=10.0, gamma=0.0, profile=sech2_profile),
            SolitonTrack(omega=1.0, v=0.0, y=0.0, gamma=0.0, profile=middle),
            SolitonTrack(omega=1.0, v=-4.0, y=-10.0, gamma=0.0, profile=sech2_profile),
        ))

    def test_points_are_mirrored_through_earlier_tracks(self, sech2_profile):
        first, second = threshold_frequencies(self._config(sech2_profile, sech2_profile), [True] * 3)
        assert np.allclose(first, [-2.0, 0.0, 2.0])
        assert np.allclose(second, [-2.0, 0.0, 2.0])

    def test_transparent_tracks_neither_add_nor_mirror(self, sech2_profile):
        middle = PotentialProfile(kind=ProfileKind.ZERO)
        first, second = threshold_frequencies(self._config(sech2_profile, middle), [True, False, True])
        assert np.allclose(first, [-2.0, 2.0])
        assert np.allclose(second, [-2.0, 2.0])

    def test_flag_count_must_match(self, sech2_profile):
        with pytest.raises(ValueError):
            threshold_frequencies(self._config(sech2_profile, sech2_profile), [True])


class TestReflectingTransition:
    """Transition between two sech^2 tracks on a box large enough for both."""

    @pytest.fixture
    def setup(self, sech2_profile):
        grid = Grid1D(-40.0, 40.0, 1024)
        lattice = grid.lattice(4.0)
        config = ModelConfig(tracks=(
            SolitonTrack(omega=1.0, v=2.0, y=8.0, gamma=0.0, profile=sech2_profile),
            SolitonTrack(omega=1.0, v=-2.0, y=-8.0, gamma=0.3, profile=sech2_profile),
        ))
        data = [build_scattering_data(track, grid, lattice) for track in config.tracks]
        phi = random_profile(lattice, np.random.default_rng(11), position_spread=1.0,
                             notches=threshold_frequencies(config, [True, True]))
        return recurse_profiles(phi, config, data)

    def test_transition_holds_for_reflecting_potentials(self, setup):
        assert transition_defect(setup, 1) < 1e-4

    def test_recursion_is_reproducible(self, setup):
        assert recursion_defect(setup) < 1e-10


class TestReflectionlessPair:
    """Two -2 sech^2 tracks: every step is a pure phase, so profile moduli are preserved."""

    @pytest.fixture
    def setup(self):
        grid = Grid1D(-40.0, 40.0, 1024)
        lattice = grid.lattice(4.0)
        well = PotentialProfile(kind=ProfileKind.SECH2, u_amplitude=-2.0, w_amplitude=0.0)
        config = ModelConfig(tracks=(
            SolitonTrack(omega=1.0, v=2.0, y=8.0, gamma=0.3, profile=well),
            SolitonTrack(omega=1.0, v=-2.0, y=-8.0, gamma=0.0, profile=well),
        ))
        data = [build_scattering_data(track, grid, lattice) for track in config.tracks]
        k = lattice.samples
        phi = FrequencyPair(lattice, np.stack([_gaussian(k, 0.5, 0.5, 1.0), _gaussian(k, -0.3, 0.5, -1.0)], axis=-1))
        return phi, recurse_profiles(phi, config, data)

    def test_moduli_are_preserved(self, setup):
        phi, family = setup
        gap = np.abs(np.abs(family.per_ell[1].values) - np.abs(phi.values)).max()
        assert gap < 1e-4 * np.abs(phi.values).max()

    def test_step_is_inverted(self, setup):
        phi, family = setup
        back = inverse_recursion_step(family.per_ell[1], family.config.tracks[1], family.data[1])
        assert (back - phi).norm() < 1e-6 * phi.norm()

    def test_transition_holds(self, setup):
        _, family = setup
        assert transition_defect(family, 1) < 1e-4
