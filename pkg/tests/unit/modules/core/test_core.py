import numpy as np
import pytest

from src.modules.core.errors import GridError, ProfileError, SeparationError
from src.modules.core.fields import SpinorField
from src.modules.core.galilei import free_evolve, galilei_apply, galilei_unwind, spectral_shift
from src.modules.core.grid import Grid1D
from src.modules.core.norms import h1_norm, l2_norm, sigma3_pairing
from src.modules.core.profiles import PotentialProfile, ProfileKind
from src.modules.core.tracks import ModelConfig, SolitonTrack


class TestGrid:
    """Grid sizing and the half-shifted dual lattice."""

    def test_rejects_non_power_of_two(self):
        with pytest.raises(GridError):
            Grid1D(-10.0, 10.0, 500)

    def test_rejects_empty_box(self):
        with pytest.raises(GridError):
            Grid1D(10.0, -10.0, 256)

    def test_lattice_is_symmetric_without_zero(self, small_lattice):
        k = small_lattice.samples
        assert np.allclose(k, -k[::-1])
        assert np.min(np.abs(k)) == pytest.approx(small_lattice.delta_k / 2.0)

    def test_lattice_rejects_inconsistent_n_k(self, small_grid):
        with pytest.raises(GridError):
            small_grid.lattice(8.0, n_k=40)

    def test_lattice_cannot_exceed_grid(self):
        grid = Grid1D(-5.0, 5.0, 64)
        with pytest.raises(GridError):
            grid.lattice(100.0)


class TestTracks:
    """Ordering and separation rules of the model configuration."""

    def test_requires_decreasing_velocity(self):
        with pytest.raises(SeparationError):
            ModelConfig(tracks=(
                SolitonTrack(omega=1.0, v=-1.0, y=5.0, gamma=0.0),
                SolitonTrack(omega=1.0, v=1.0, y=-5.0, gamma=0.0),
            ))

    def test_enforces_position_threshold(self):
        with pytest.raises(SeparationError):
            ModelConfig(
                tracks=(
                    SolitonTrack(omega=1.0, v=1.0, y=2.0, gamma=0.0),
                    SolitonTrack(omega=1.0, v=-1.0, y=-2.0, gamma=0.0),
                ),
                l_sep=10.0,
            )

    def test_box_must_hold_tracks(self, small_grid):
        config = ModelConfig(
            tracks=(SolitonTrack(omega=1.0, v=4.0, y=15.0, gamma=0.0),),
            t_final=2.0,
        )
        with pytest.raises(SeparationError):
            config.check_box(small_grid)

    def test_gaps_and_midpoints(self, zero_pair):
        assert zero_pair.min_position_gap == pytest.approx(10.0)
        assert zero_pair.min_velocity_gap == pytest.approx(4.0)
        assert zero_pair.midpoints(0.0) == pytest.approx([0.0])

    def test_nonpositive_omega(self):
        with pytest.raises(SeparationError):
            SolitonTrack(omega=0.0, v=0.0, y=0.0, gamma=0.0)


class TestProfiles:
    """Even exponentially decaying profiles."""

    def test_sech2_decay_constant(self, small_grid, sech2_profile):
        constant = sech2_profile.verify(small_grid.x)
        assert 0.0 < constant < 5.0
        assert sech2_profile.gamma_decay == pytest.approx(2.0)

    def test_zero_profile(self, small_grid):
        profile = PotentialProfile()
        assert profile.is_zero
        assert profile.verify(small_grid.x) == 0.0
        assert profile.support_radius() == 0.0

    def test_ground_state_potential(self, small_grid):
        profile = PotentialProfile(kind=ProfileKind.NLS_GROUND_STATE, omega=1.0)
        x = small_grid.x
        assert np.allclose(profile.U(x), -2.0 * profile.W(x))
        assert profile.W(np.array([0.0]))[0] == pytest.approx(2.0)

    def test_invalid_width(self):
        with pytest.raises(ProfileError):
            PotentialProfile(kind=ProfileKind.SECH, width=0.0)


class TestFields:
    """Spinor fields, the Galilei map and norms."""

    def _bump(self, grid: Grid1D) -> SpinorField:
        x = grid.x
        return SpinorField.from_components(grid, np.exp(-x ** 2), 0.5j * np.exp(-(x - 1.0) ** 2))

    def test_shape_is_checked(self, small_grid):
        with pytest.raises(ValueError):
            SpinorField(small_grid, np.zeros((small_grid.n_x, 3)))

    def test_galilei_unwind_inverts_apply(self, small_grid):
        track = SolitonTrack(omega=1.0, v=1.5, y=2.0, gamma=0.3)
        g = self._bump(small_grid)
        back = galilei_unwind(track, galilei_apply(track, g, 0.7), 0.7)
        assert l2_norm(back - g) < 1e-10

    def test_antiperiodic_shift_is_exact_on_lattice_waves(self, small_grid, small_lattice):
        k = small_lattice.samples[60]
        wave = np.exp(1j * k * small_grid.x)
        shifted = spectral_shift(small_grid, wave, 2.3, antiperiodic=True)
        assert np.max(np.abs(shifted - np.exp(1j * k * (small_grid.x - 2.3)))) < 1e-10

    def test_periodic_shift_smears_lattice_waves(self, small_grid, small_lattice):
        k = small_lattice.samples[60]
        wave = np.exp(1j * k * small_grid.x)
        shifted = spectral_shift(small_grid, wave, 2.3)
        assert np.max(np.abs(shifted - np.exp(1j * k * (small_grid.x - 2.3)))) > 1e-3

    def test_galilei_preserves_norm(self, small_grid):
        track = SolitonTrack(omega=1.0, v=-1.0, y=-3.0, gamma=0.0)
        g = self._bump(small_grid)
        assert l2_norm(galilei_apply(track, g, 0.5)) == pytest.approx(l2_norm(g), rel=1e-10)

    def test_free_evolution_is_unitary(self, small_grid):
        g = self._bump(small_grid)
        evolved = free_evolve(g, 1.3, omega=1.0)
        assert l2_norm(evolved) == pytest.approx(l2_norm(g), rel=1e-12)
        assert h1_norm(evolved) == pytest.approx(h1_norm(g), rel=1e-12)

    def test_sigma3_pairing_signs(self, small_grid):
        x = small_grid.x
        first = SpinorField.from_components(small_grid, np.exp(-x ** 2), np.zeros_like(x))
        second = SpinorField.from_components(small_grid, np.zeros_like(x), np.exp(-x ** 2))
        assert sigma3_pairing(first, first).real > 0
        assert sigma3_pairing(second, second).real < 0
        assert abs(sigma3_pairing(first, second)) == 0.0
