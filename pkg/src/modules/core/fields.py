from dataclasses import dataclass
from typing import Union
import numpy as np

from .grid import Grid1D


Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class SpinorField:
    """Complex two-component field sampled on a grid; values has shape (n_x, 2)."""
    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128)
        if values.shape != (self.grid.n_x, 2):
            raise ValueError(f"field values must have shape ({self.grid.n_x}, 2), got {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("field values must be finite at every node")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, grid: Grid1D) -> "SpinorField":
        return cls(grid, np.zeros((grid.n_x, 2), dtype=np.complex128))

    @classmethod
    def from_components(cls, grid: Grid1D, first: np.ndarray, second: np.ndarray) -> "SpinorField":
        return cls(grid, np.stack([first, second], axis=-1))

    @property
    def first(self) -> np.ndarray:
        return self.values[:, 0]

    @property
    def second(self) -> np.ndarray:
        return self.values[:, 1]

    def with_values(self, values: np.ndarray) -> "SpinorField":
        return SpinorField(self.grid, values)

    def sigma3(self) -> "SpinorField":
        return self.with_values(self.values * np.array([1.0, -1.0]))

    def sigma1(self) -> "SpinorField":
        return self.with_values(self.values[:, ::-1])

    def _check_grid(self, other: "SpinorField") -> None:
        if other.grid != self.grid:
            raise ValueError("fields live on different grids")

    def __add__(self, other: "SpinorField") -> "SpinorField":
        self._check_grid(other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other: "SpinorField") -> "SpinorField":
        self._check_grid(other)
        return self.with_values(self.values - other.values)

    def __mul__(self, scalar: Scalar) -> "SpinorField":
        return self.with_values(self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "SpinorField":
        return self.with_values(-self.values)
