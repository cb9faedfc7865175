import numpy as np
import pytest

from src.modules.core.fields import SpinorField
from src.modules.core.norms import sigma3_pairing
from src.modules.core.tracks import SolitonTrack
from src.modules.spectrum import (
    DiscreteSpectrum,
    Eigenpair,
    GramSingular,
    Stencil,
    band_distance,
    discrete_eigens,
    discretize_operator,
    eigen_window,
    fourier_resample,
    projection_Pd,
)


@pytest.fixture
def bump(small_grid) -> SpinorField:
    x = small_grid.x
    return SpinorField.from_components(small_grid, np.exp(-x ** 2), np.zeros_like(x))


class TestBandDistance:
    @pytest.mark.parametrize("value, expected", [
        (2.0, 0.0),
        (-3.0 + 0.25j, 0.25),
        (0.5, 0.5),
        (0.5 + 0.5j, np.hypot(0.5, 0.5)),
    ])
    def test_distance_to_bands(self, value, expected):
        assert band_distance(complex(value), 1.0) == pytest.approx(expected)


class TestEigenWindow:
    def test_full_box_window(self, small_grid):
        window = eigen_window(small_grid)
        assert window.span == 512
        assert window.stride == 1
        index = window.reflection()
        assert np.allclose(window.x[index][1:], -window.x[1:])

    def test_half_width_and_node_cap(self, small_grid):
        window = eigen_window(small_grid, half_width=5.0, max_nodes=32)
        assert window.span == 128
        assert window.n == 32
        assert window.h == pytest.approx(4 * small_grid.h)

    def test_resample_is_exact_for_band_limited_samples(self):
        coarse = np.cos(2.0 * np.pi * 3 * np.arange(16) / 16)
        fine = fourier_resample(coarse, 32)
        assert np.allclose(fine, np.cos(2.0 * np.pi * 3 * np.arange(32) / 32), atol=1e-12)


class TestOperator:
    @pytest.mark.parametrize("stencil", [Stencil.FOURIER, Stencil.FD2])
    def test_sigma1_anticommutes(self, small_grid, sech2_profile, stencil):
        track = SolitonTrack(omega=1.0, v=0.0, y=0.0, gamma=0.0, profile=sech2_profile)
        window = eigen_window(small_grid, half_width=5.0, max_nodes=32)
        matrix = discretize_operator(track, window, stencil)
        n = window.n
        swap = np.block([[np.zeros((n, n)), np.eye(n)], [np.eye(n), np.zeros((n, n))]])
        assert np.allclose(swap @ matrix @ swap, -matrix)

    def test_free_operator_spectrum_stays_in_bands(self, small_grid, zero_track):
        window = eigen_window(small_grid, half_width=5.0, max_nodes=32)
        values = np.linalg.eigvals(discretize_operator(zero_track, window, Stencil.FD2))
        assert np.allclose(values.imag, 0.0, atol=1e-10)
        assert np.min(np.abs(values.real)) >= 1.0 - 1e-10

    def test_zero_potential_has_no_discrete_spectrum(self, zero_track, small_grid, test_logger):
        spectrum = discrete_eigens(zero_track, small_grid, logger=test_logger)
        assert spectrum.is_empty
        assert spectrum.basis() == []


class TestProjection:
    def test_projection_keeps_basis_vectors(self, zero_track, bump):
        spectrum = DiscreteSpectrum(track=zero_track, eigenpairs=(Eigenpair(0.5, bump, 1.0),))
        projected = projection_Pd(bump, spectrum)
        assert np.allclose(projected.values, bump.values, atol=1e-12)

    def test_projection_drops_sigma3_orthogonal_part(self, zero_track, bump, small_grid):
        x = small_grid.x
        other = SpinorField.from_components(small_grid, np.zeros_like(x), np.exp(-(x - 1.0) ** 2))
        assert sigma3_pairing(other, bump) == 0.0
        spectrum = DiscreteSpectrum(track=zero_track, eigenpairs=(Eigenpair(0.5, bump, 1.0),))
        projected = projection_Pd(bump.with_values(bump.values + other.values), spectrum)
        assert np.allclose(projected.values, bump.values, atol=1e-12)

    def test_empty_spectrum_projects_to_zero(self, zero_track, bump):
        projected = projection_Pd(bump, DiscreteSpectrum(track=zero_track))
        assert not np.any(projected.values)

    def test_repeated_basis_vector_is_singular(self, zero_track, bump):
        spectrum = DiscreteSpectrum(
            track=zero_track,
            eigenpairs=(Eigenpair(0.5, bump, 1.0), Eigenpair(-0.5, bump, 1.0)),
        )
        with pytest.raises(GramSingular):
            projection_Pd(bump, spectrum)
