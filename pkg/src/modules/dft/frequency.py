from dataclasses import dataclass
from typing import Union
import numpy as np

from ..core.grid import KLattice


Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class FrequencyPair:
    """Pair (u1(k), u2(k)) sampled on a dual lattice; values has shape (n_k, 2)."""
    lattice: KLattice
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128)
        if values.shape != (self.lattice.n, 2):
            raise ValueError(f"frequency values must have shape ({self.lattice.n}, 2), got {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("frequency values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, lattice: KLattice) -> "FrequencyPair":
        return cls(lattice, np.zeros((lattice.n, 2), dtype=np.complex128))

    @property
    def k(self) -> np.ndarray:
        return self.lattice.samples

    def with_values(self, values: np.ndarray) -> "FrequencyPair":
        return FrequencyPair(self.lattice, values)

    def sigma3(self) -> "FrequencyPair":
        return self.with_values(self.values * np.array([1.0, -1.0]))

    def reflect(self) -> "FrequencyPair":
        """u(-k)."""
        return self.with_values(self.values[::-1])

    def norm(self) -> float:
        return float(np.sqrt(self.lattice.delta_k * np.sum(np.abs(self.values) ** 2)))

    def weighted_norm(self, power: float) -> float:
        """||(1 + |k|)^power u||."""
        weight = (1.0 + np.abs(self.k)) ** power
        return float(np.sqrt(self.lattice.delta_k * np.sum((weight[:, None] * np.abs(self.values)) ** 2)))

    def _check(self, other: "FrequencyPair") -> None:
        if other.lattice != self.lattice:
            raise ValueError("frequency pairs live on different lattices")

    def __add__(self, other: "FrequencyPair") -> "FrequencyPair":
        self._check(other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other: "FrequencyPair") -> "FrequencyPair":
        self._check(other)
        return self.with_values(self.values - other.values)

    def __mul__(self, scalar: Scalar) -> "FrequencyPair":
        return self.with_values(self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "FrequencyPair":
        return self.with_values(-self.values)


def gaussian_packet(lattice: KLattice, center: float, width: float, position: float = 0.0,
                    amplitude: complex = 1.0) -> np.ndarray:
    """amplitude * exp(-(k - center)^2 / (2 width^2) - i k position) on the lattice."""
    k = lattice.samples
    return amplitude * np.exp(-((k - center) ** 2) / (2.0 * width ** 2) - 1j * k * position)
