import numpy as np
import pytest

from src.modules.core.grid import Grid1D
from src.modules.core.tracks import SolitonTrack
from src.modules.core.norms import l2_norm
from src.modules.dft.flat import flat_F0, flat_F0_adjoint, frequency_phase
from src.modules.dft.frequency import FrequencyPair, gaussian_packet
from src.modules.dft.inversion import inversion_residual, low_k_mass, reflection_relation
from src.modules.dft.transforms import forward_Fhat, forward_Ghat, inverse_Ghat, projection_Pe
from src.modules.jost.builder import build_scattering_data
from src.modules.verify.bank import notch_factor, random_field, random_profile


@pytest.fixture
def packet(small_lattice) -> FrequencyPair:
    values = np.stack([
        gaussian_packet(small_lattice, 1.0, 0.8, position=2.0),
        gaussian_packet(small_lattice, -0.5, 0.6, amplitude=0.5j),
    ], axis=-1)
    return FrequencyPair(small_lattice, values)


@pytest.fixture
def zero_data(zero_track, small_grid, small_lattice):
    return build_scattering_data(zero_track, small_grid, small_lattice)


class TestFlatTransform:
    """The flat transform F0 and its adjoint on the dual lattice."""

    def test_gaussian_closed_form(self, small_grid, small_lattice):
        width = 1.0
        values = np.stack([gaussian_packet(small_lattice, 0.0, width), np.zeros(small_lattice.n)], axis=-1)
        field = flat_F0(FrequencyPair(small_lattice, values), small_grid)
        x = small_grid.x
        inside = np.abs(x) < 10.0
        expected = width * np.exp(-(width * x[inside]) ** 2 / 2.0)
        assert np.max(np.abs(field.first[inside] - expected)) < 1e-10

    def test_adjoint_inverts_on_the_lattice(self, packet, small_grid, small_lattice):
        back = flat_F0_adjoint(flat_F0(packet, small_grid), small_lattice)
        assert (back - packet).norm() < 1e-12 * packet.norm()

    def test_isometry(self, packet, small_grid):
        assert l2_norm(flat_F0(packet, small_grid)) == pytest.approx(packet.norm(), rel=1e-12)

    def test_phase_translates(self, small_grid, small_lattice):
        values = np.stack([gaussian_packet(small_lattice, 0.0, 1.0), np.zeros(small_lattice.n)], axis=-1)
        moved = flat_F0(frequency_phase(FrequencyPair(small_lattice, values), [3.0, 0.0]), small_grid)
        x = small_grid.x
        inside = np.abs(x) < 8.0
        assert np.max(np.abs(moved.first[inside] - np.exp(-(x[inside] + 3.0) ** 2 / 2.0))) < 1e-10

    def test_lattice_mismatch(self, packet):
        with pytest.raises(ValueError):
            flat_F0(packet, Grid1D(-10.0, 10.0, 512))


class TestDistortedTransforms:
    """With no potential the distorted transforms collapse to the flat one."""

    def test_synthesis_reduces_to_flat(self, packet, zero_data, small_grid):
        flat = flat_F0(packet, small_grid)
        assert l2_norm(forward_Ghat(packet, zero_data) - flat) < 1e-8 * l2_norm(flat)
        assert l2_norm(forward_Fhat(packet, zero_data) - flat) < 1e-8 * l2_norm(flat)

    def test_inverse_reduces_to_adjoint(self, zero_data, small_grid, small_lattice):
        f = random_field(small_grid, small_lattice, np.random.default_rng(3))
        assert (inverse_Ghat(f, zero_data) - flat_F0_adjoint(f, small_lattice)).norm() < 1e-8 * l2_norm(f)

    def test_inversion_residuals(self, zero_data, small_grid, small_lattice):
        rng = np.random.default_rng(11)
        u = random_profile(small_lattice, rng)
        f = flat_F0(u, small_grid)
        residual = inversion_residual(u, f, zero_data)
        assert residual.frequency_G < 1e-8
        assert residual.frequency_F < 1e-8
        assert residual.physical < 1e-8

    def test_essential_projection_is_identity_on_band_limited_data(self, zero_data, small_grid, small_lattice):
        f = random_field(small_grid, small_lattice, np.random.default_rng(5))
        assert l2_norm(projection_Pe(f, zero_data) - f) < 1e-8 * l2_norm(f)

    def test_reflection_relation(self, packet, zero_data):
        assert reflection_relation(packet, zero_data) < 1e-10


@pytest.fixture
def sech2_table(sech2_profile):
    grid = Grid1D(-20.0, 20.0, 1024)
    track = SolitonTrack(omega=1.0, v=0.0, y=0.0, gamma=0.0, profile=sech2_profile)
    return build_scattering_data(track, grid, grid.lattice(4.0))


class TestThresholdMass:
    """Profiles sitting on k = 0 are flagged in inversion reports."""

    def test_low_k_mass_fraction(self, small_lattice):
        packet = gaussian_packet(small_lattice, 0.0, 0.05)
        u = FrequencyPair(small_lattice, np.stack([packet, np.zeros_like(packet)], axis=-1))
        assert low_k_mass(u, 0.25) > 0.99
        assert low_k_mass(FrequencyPair.zeros(small_lattice), 0.25) == 0.0

    def test_threshold_packet_is_flagged(self, sech2_table):
        lattice = sech2_table.lattice
        packet = gaussian_packet(lattice, 0.0, 0.2)
        residual = inversion_residual(FrequencyPair(lattice, np.stack([packet, packet], axis=-1)), None, sech2_table)
        assert residual.threshold_sensitive
        assert residual.as_dict()["low_k_mass"] == residual.low_k_mass

    def test_notched_profile_is_not_flagged(self, sech2_table):
        lattice = sech2_table.lattice
        packet = gaussian_packet(lattice, 1.5, 0.5, position=1.0) * notch_factor(lattice.samples, [0.0])
        u = FrequencyPair(lattice, np.stack([packet, 0.5j * packet], axis=-1))
        residual = inversion_residual(u, None, sech2_table)
        assert not residual.threshold_sensitive
