from abc import ABC, abstractmethod
from enum import Enum
from typing import Optional

from ...core.grid import Grid1D, KLattice
from ...core.tracks import SolitonTrack
from ..data import ScatteringData


class TableStoreType(str, Enum):
    FILE = "file"


class TableStore(ABC):
    """Base class for scattering table storage implementations."""

    @abstractmethod
    def save(self, data: ScatteringData) -> None:
        """Save a table under its content hash."""
        pass

    @abstractmethod
    def load(self, content_hash: str, track: SolitonTrack, grid: Grid1D,
             lattice: KLattice) -> Optional[ScatteringData]:
        """Load a table, or None when absent or stale."""
        pass

    @abstractmethod
    def clear(self, content_hash: str) -> None:
        """Remove a stored table."""
        pass
