import numpy as np
import pytest

from src.modules.dft.frequency import gaussian_packet
from src.modules.hardy import (
    HalfLineSignal,
    Side,
    hardy_project,
    leakage_estimate,
    leakage_sweep,
    project_minus,
    project_plus,
    unit_multiplier,
)


@pytest.fixture
def packet(small_lattice) -> np.ndarray:
    return gaussian_packet(small_lattice, 0.3, 0.7) + gaussian_packet(small_lattice, -1.0, 0.4, position=2.0)


class TestSide:
    def test_opposite_and_sign(self):
        assert Side.PLUS.opposite is Side.MINUS
        assert Side.MINUS.opposite is Side.PLUS
        assert Side.PLUS.sign == 1
        assert Side("-").sign == -1


class TestProjections:
    def test_halves_add_up(self, packet, small_lattice):
        plus = project_plus(packet, small_lattice)
        minus = project_minus(packet, small_lattice)
        assert np.allclose(plus.values + minus.values, packet, atol=1e-12)

    def test_projection_is_idempotent(self, packet):
        once = hardy_project(packet, Side.PLUS)
        assert np.allclose(hardy_project(once, Side.PLUS), once, atol=1e-12)
        assert np.max(np.abs(hardy_project(once, Side.MINUS))) < 1e-12

    def test_spinor_columns_projected_independently(self, packet, small_lattice):
        pair = np.stack([packet, 2.0 * packet], axis=-1)
        projected = hardy_project(pair, Side.MINUS)
        assert projected.shape == pair.shape
        assert np.allclose(projected[:, 1], 2.0 * projected[:, 0], atol=1e-12)

    def test_packet_on_the_right_is_plus(self, small_lattice):
        # e^{-ik(-10)} puts the packet at x = +10
        shifted = gaussian_packet(small_lattice, 0.0, 0.5, position=-10.0)
        plus = project_plus(shifted, small_lattice)
        minus = project_minus(shifted, small_lattice)
        assert minus.norm() < 1e-3 * plus.norm()

    def test_signal_rejects_wrong_length(self, small_lattice):
        with pytest.raises(ValueError):
            HalfLineSignal(small_lattice, np.zeros(small_lattice.n + 1), Side.PLUS)

    def test_signal_is_read_only(self, packet, small_lattice):
        signal = project_plus(packet, small_lattice)
        with pytest.raises(ValueError):
            signal.values[0] = 1.0


class TestLeakage:
    def test_unit_multiplier_without_shift_does_not_leak(self, packet, small_lattice):
        signal = project_plus(packet, small_lattice)
        assert leakage_estimate(signal, unit_multiplier, 0.0) < 1e-12 * signal.norm()

    def test_sweep_keys_follow_separations(self, packet, small_lattice):
        signal = project_minus(packet, small_lattice)
        sweep = leakage_sweep(signal, unit_multiplier, [0, 1.5, 3])
        assert list(sweep) == [0.0, 1.5, 3.0]
        assert all(value >= 0.0 for value in sweep.values())
