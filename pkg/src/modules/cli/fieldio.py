from pathlib import Path
from typing import Optional, Union
import zlib
import numpy as np

from ..core.fields import SpinorField
from ..core.grid import Grid1D
from .errors import FieldFileError

MAGIC = b"CTMF"
VERSION = 1

# magic, version, n_x, x_min, x_max, crc32 of the payload; all little-endian
HEADER = np.dtype([
    ("magic", "S4"),
    ("version", "<u4"),
    ("n_x", "<u8"),
    ("x_min", "<f8"),
    ("x_max", "<f8"),
    ("crc32", "<u4"),
])


def _payload(field: SpinorField) -> bytes:
    """Nodes in order, each as re/im of the first then the second component."""
    return np.ascontiguousarray(field.values, dtype="<c16").tobytes()


def write_field(path: Union[str, Path], field: SpinorField) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = _payload(field)
    header = np.zeros(1, dtype=HEADER)
    header[0] = (MAGIC, VERSION, field.grid.n_x, field.grid.x_min, field.grid.x_max, zlib.crc32(payload))
    with open(path, "wb") as f:
        f.write(header.tobytes())
        f.write(payload)
    return path


def read_field(path: Union[str, Path], grid: Optional[Grid1D] = None) -> SpinorField:
    """Read a field file; with ``grid`` given the file has to match it exactly."""
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise FieldFileError(f"Cannot read field file {path}: {e.strerror}")
    if len(raw) < HEADER.itemsize:
        raise FieldFileError(f"{path} is too short to hold a field header")
    header = np.frombuffer(raw[:HEADER.itemsize], dtype=HEADER)[0]
    if bytes(header["magic"]) != MAGIC:
        raise FieldFileError(f"{path} is not a field file (bad magic {bytes(header['magic'])!r})")
    if int(header["version"]) != VERSION:
        raise FieldFileError(f"{path} has unsupported version {int(header['version'])}")
    n_x = int(header["n_x"])
    payload = raw[HEADER.itemsize:]
    if len(payload) != n_x * 2 * 16:
        raise FieldFileError(f"{path} holds {len(payload)} payload bytes, expected {n_x * 32}")
    if zlib.crc32(payload) != int(header["crc32"]):
        raise FieldFileError(f"{path} failed its checksum")
    stored = Grid1D(float(header["x_min"]), float(header["x_max"]), n_x)
    if grid is not None and stored != grid:
        raise FieldFileError(
            f"{path} lives on n_x={n_x} over [{stored.x_min:g}, {stored.x_max:g}], "
            f"the configuration uses n_x={grid.n_x} over [{grid.x_min:g}, {grid.x_max:g}]"
        )
    values = np.frombuffer(payload, dtype="<c16").reshape(n_x, 2).astype(np.complex128)
    return SpinorField(grid or stored, values)
