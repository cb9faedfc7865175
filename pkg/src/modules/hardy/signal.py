from dataclasses import dataclass
from enum import Enum
import numpy as np

from ..core.grid import KLattice


class Side(str, Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def opposite(self) -> "Side":
        return Side.MINUS if self is Side.PLUS else Side.PLUS

    @property
    def sign(self) -> int:
        return 1 if self is Side.PLUS else -1


@dataclass(frozen=True, eq=False)
class HalfLineSignal:
    """Samples on a dual lattice whose dual support lies on one half-line.

    ``values`` has shape (n,) or (n, 2).
    """
    lattice: KLattice
    values: np.ndarray
    side: Side

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128)
        if values.shape[0] != self.lattice.n or values.ndim > 2:
            raise ValueError(f"signal must have {self.lattice.n} samples along axis 0")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "side", Side(self.side))

    def norm(self) -> float:
        return float(np.sqrt(self.lattice.delta_k * np.sum(np.abs(self.values) ** 2)))
