import numpy as np
import pytest

from src.modules.cli.errors import FieldFileError
from src.modules.cli.fieldio import HEADER, read_field, write_field
from src.modules.core.fields import SpinorField
from src.modules.core.grid import Grid1D


@pytest.fixture
def field(small_grid) -> SpinorField:
    x = small_grid.x
    return SpinorField.from_components(small_grid, np.exp(-x ** 2) * (1 + 2j), np.sin(x) * np.exp(-x ** 2 / 4))


class TestFieldFiles:
    """Binary field files: header, checksum and grid matching."""

    def test_values_survive(self, field, small_grid, tmp_path):
        path = write_field(tmp_path / "nested" / "f.ctmf", field)
        assert path.stat().st_size == HEADER.itemsize + small_grid.n_x * 32
        loaded = read_field(path, small_grid)
        assert np.array_equal(loaded.values, field.values)
        assert loaded.grid == small_grid

    def test_grid_taken_from_header(self, field, small_grid, tmp_path):
        loaded = read_field(write_field(tmp_path / "f.ctmf", field))
        assert loaded.grid == small_grid

    def test_corrupted_payload(self, field, tmp_path):
        path = write_field(tmp_path / "f.ctmf", field)
        raw = bytearray(path.read_bytes())
        raw[-1] ^= 0xFF
        path.write_bytes(bytes(raw))
        with pytest.raises(FieldFileError, match="checksum"):
            read_field(path)

    def test_bad_magic(self, field, tmp_path):
        path = write_field(tmp_path / "f.ctmf", field)
        raw = bytearray(path.read_bytes())
        raw[:4] = b"XXXX"
        path.write_bytes(bytes(raw))
        with pytest.raises(FieldFileError, match="magic"):
            read_field(path)

    def test_truncated(self, field, tmp_path):
        path = write_field(tmp_path / "f.ctmf", field)
        path.write_bytes(path.read_bytes()[:-8])
        with pytest.raises(FieldFileError, match="payload bytes"):
            read_field(path)

    def test_too_short_for_header(self, tmp_path):
        path = tmp_path / "f.ctmf"
        path.write_bytes(b"CTMF")
        with pytest.raises(FieldFileError, match="too short"):
            read_field(path)

    def test_grid_mismatch(self, field, tmp_path):
        path = write_field(tmp_path / "f.ctmf", field)
        with pytest.raises(FieldFileError, match="n_x=512") as info:
            read_field(path, Grid1D(-20.0, 20.0, 1024))
        assert info.value.check_id == "cli.field_file"

    def test_missing_file(self, tmp_path):
        with pytest.raises(FieldFileError, match="Cannot read"):
            read_field(tmp_path / "absent.ctmf")
