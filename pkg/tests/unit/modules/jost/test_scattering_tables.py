import numpy as np
import pytest

from src.modules.core.grid import Grid1D
from src.modules.core.tracks import SolitonTrack
from src.modules.jost.builder import build_scattering_data, solve_jost
from src.modules.jost.cache import TableStoreType, create_table_store
from src.modules.jost.identities import large_k_fit, unitarity_report, verify_connection
from src.modules.spectrum.errors import InconclusiveFit
from src.modules.spectrum.resonance import Threshold, resonance_check


@pytest.fixture
def zero_data(zero_track, small_grid, small_lattice):
    return build_scattering_data(zero_track, small_grid, small_lattice)


@pytest.fixture
def sech2_data(sech2_profile):
    grid = Grid1D(-20.0, 20.0, 1024)
    track = SolitonTrack(omega=1.0, v=0.0, y=0.0, gamma=0.0, profile=sech2_profile)
    return build_scattering_data(track, grid, grid.lattice(4.0))


class TestZeroPotential:
    """Without a potential the Jost solutions are plane waves."""

    def test_coefficients_are_trivial(self, zero_data):
        assert np.max(np.abs(zero_data.s - 1.0)) < 1e-10
        assert np.max(np.abs(zero_data.r)) < 1e-10

    def test_identities_hold(self, zero_data):
        report = unitarity_report(zero_data)
        assert report.unitarity < 1e-10
        assert report.s_symmetry < 1e-10
        assert report.cross < 1e-10

    def test_large_k_constants_vanish(self, zero_data):
        fit = large_k_fit(zero_data)
        assert fit.k_high == pytest.approx(zero_data.lattice.k_max)
        assert fit.s_constant < 1e-8
        assert fit.r_constant < 1e-8

    def test_connection_formula(self, zero_data):
        assert verify_connection(zero_data, 1.0) < 1e-10

    def test_single_solution_is_plane_wave(self, zero_track, small_grid):
        F = solve_jost(zero_track, small_grid, 1.5, "F")
        assert np.allclose(F.first, np.exp(1.5j * small_grid.x))
        assert np.all(F.second == 0)

    def test_zero_wavenumber_rejected(self, zero_track, small_grid):
        with pytest.raises(ValueError):
            solve_jost(zero_track, small_grid, 0.0)

    def test_small_box_threshold_fit_is_inconclusive(self, zero_data):
        with pytest.raises(InconclusiveFit):
            resonance_check(zero_data)

    def test_free_thresholds_are_nongeneric(self, zero_track):
        grid = Grid1D(-60.0, 60.0, 1024)
        data = build_scattering_data(zero_track, grid, grid.lattice(2.0))
        report = resonance_check(data)
        assert report.classification is Threshold.NONGENERIC
        assert report.c0 == pytest.approx(1.0, abs=1e-6)
        assert not report.generic


class TestSech2Potential:
    """A real even potential gives conjugate-symmetric coefficients."""

    def test_conjugate_symmetry(self, sech2_data):
        report = unitarity_report(sech2_data)
        assert report.s_symmetry < 1e-8
        assert report.r_symmetry < 1e-8

    def test_punctured_samples_flagged(self, sech2_data):
        assert np.array_equal(sech2_data.punctured, np.abs(sech2_data.k_samples) < sech2_data.k_floor)


class TestTableStore:
    """Scattering tables are cached by content hash."""

    def test_save_and_load(self, tmp_path, zero_track, small_grid, small_lattice, test_logger):
        store = create_table_store(TableStoreType.FILE, str(tmp_path))
        built = build_scattering_data(zero_track, small_grid, small_lattice, store=store)
        assert (tmp_path / f"{built.content_hash}.ctmt").exists()

        loaded = build_scattering_data(zero_track, small_grid, small_lattice, logger=test_logger, store=store)
        assert np.array_equal(loaded.s, built.s)
        assert np.array_equal(loaded.jost_F, built.jost_F)
        assert any("loaded from cache" in line for line in test_logger.get_logs())

    def test_corrupt_file_is_ignored(self, tmp_path, zero_track, small_grid, small_lattice):
        store = create_table_store(TableStoreType.FILE, str(tmp_path))
        built = build_scattering_data(zero_track, small_grid, small_lattice, store=store)
        (tmp_path / f"{built.content_hash}.ctmt").write_bytes(b"garbage")
        assert store.load(built.content_hash, zero_track, small_grid, small_lattice) is None

    def test_hash_depends_on_grid(self, zero_track, small_grid, small_lattice):
        other = Grid1D(-20.0, 20.0, 256)
        first = build_scattering_data(zero_track, small_grid, small_lattice)
        second = build_scattering_data(zero_track, other, other.lattice(8.0))
        assert first.content_hash != second.content_hash
