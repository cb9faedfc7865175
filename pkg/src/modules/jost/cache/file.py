from pathlib import Path
import os
import struct
from typing import Optional
import numpy as np

from ...core.grid import Grid1D, KLattice
from ...core.tracks import SolitonTrack
from ..data import ScatteringData
from .base import TableStore

MAGIC = b"CTMT"
VERSION = 1
# magic, version, hash, n_k, n_x, k_floor, delta_k
_HEADER = struct.Struct("<4sI32sIIdd")
_COMPLEX = np.dtype("<c16")
_REAL = np.dtype("<f8")


class FileTableStore(TableStore):
    """Binary file store: header followed by row-major little-endian arrays."""

    def __init__(self, directory: str):
        if not directory:
            raise ValueError("directory is required for the file-based table store")
        self.base_path = Path(os.path.expanduser(directory))
        self.base_path.mkdir(parents=True, exist_ok=True)

    def _get_table_path(self, content_hash: str) -> Path:
        return self.base_path / f"{content_hash}.ctmt"

    def save(self, data: ScatteringData) -> None:
        header = _HEADER.pack(MAGIC, VERSION, data.content_hash.encode("ascii"), data.lattice.n,
                              data.grid.n_x, data.k_floor, data.lattice.delta_k)
        with open(self._get_table_path(data.content_hash), "wb") as f:
            f.write(header)
            for array in (data.s, data.r, data.jost_F, data.jost_G):
                f.write(np.ascontiguousarray(array, dtype=_COMPLEX).tobytes())
            f.write(np.ascontiguousarray(data.residuals, dtype=_REAL).tobytes())

    def load(self, content_hash: str, track: SolitonTrack, grid: Grid1D,
             lattice: KLattice) -> Optional[ScatteringData]:
        path = self._get_table_path(content_hash)
        if not path.exists():
            return None
        try:
            raw = path.read_bytes()
            magic, version, stored_hash, n_k, n_x, k_floor, delta_k = _HEADER.unpack_from(raw)
            if magic != MAGIC or version != VERSION or stored_hash.decode("ascii") != content_hash:
                return None
            if n_k != lattice.n or n_x != grid.n_x:
                return None
            offset = _HEADER.size
            arrays = []
            for count, dtype in ((n_k, _COMPLEX), (n_k, _COMPLEX), (n_k * n_x * 2, _COMPLEX),
                                 (n_k * n_x * 2, _COMPLEX), (n_k, _REAL)):
                arrays.append(np.frombuffer(raw, dtype=dtype, count=count, offset=offset))
                offset += count * dtype.itemsize
            s, r, jost_F, jost_G, residuals = arrays
            return ScatteringData(
                track=track,
                grid=grid,
                lattice=lattice,
                s=s,
                r=r,
                jost_F=jost_F.reshape(n_k, n_x, 2),
                jost_G=jost_G.reshape(n_k, n_x, 2),
                k_floor=k_floor,
                residuals=np.array(residuals),
                content_hash=content_hash,
            )
        except (struct.error, ValueError, UnicodeDecodeError):
            return None

    def clear(self, content_hash: str) -> None:
        path = self._get_table_path(content_hash)
        if path.exists():
            path.unlink()
