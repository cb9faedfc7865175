from dataclasses import dataclass
from functools import cached_property
import math
import numpy as np

from .errors import GridError


@dataclass(frozen=True)
class Grid1D:
    """Uniform periodic grid on [x_min, x_max) with n_x nodes."""
    x_min: float
    x_max: float
    n_x: int

    def __post_init__(self):
        if self.n_x < 4 or self.n_x & (self.n_x - 1):
            raise GridError(f"n_x must be a power of two, got {self.n_x}")
        if not self.x_max > self.x_min:
            raise GridError(f"x_max ({self.x_max}) must exceed x_min ({self.x_min})")

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    @property
    def h(self) -> float:
        return self.length / self.n_x

    @cached_property
    def x(self) -> np.ndarray:
        nodes = self.x_min + self.h * np.arange(self.n_x)
        nodes.setflags(write=False)
        return nodes

    @cached_property
    def k_fft(self) -> np.ndarray:
        """Angular wavenumbers in FFT ordering, used for derivatives and shifts."""
        k = 2.0 * np.pi * np.fft.fftfreq(self.n_x, d=self.h)
        k.setflags(write=False)
        return k

    @property
    def delta_k(self) -> float:
        return 2.0 * np.pi / self.length

    def full_lattice(self) -> "KLattice":
        return KLattice(delta_k=self.delta_k, n=self.n_x)

    def lattice(self, k_max: float, n_k: int | None = None) -> "KLattice":
        """Sub-lattice |k| <= k_max of the half-shifted dual lattice.

        When ``n_k`` is given it has to agree with ``k_max`` within one
        lattice spacing.
        """
        expected = 2 * math.floor(k_max / self.delta_k + 0.5)
        if n_k is None:
            n_k = expected
        elif abs(n_k - expected) > 2:
            raise GridError(
                f"n_k={n_k} does not match k_max={k_max} on this grid (expected about {expected})"
            )
        if n_k % 2 or n_k <= 0:
            raise GridError(f"n_k must be a positive even number, got {n_k}")
        if n_k > self.n_x:
            raise GridError(f"n_k={n_k} exceeds n_x={self.n_x}; lower k_max or refine the grid")
        return KLattice(delta_k=self.delta_k, n=n_k)

    def index_of(self, x0: float) -> int:
        return int(np.argmin(np.abs(self.x - x0)))


@dataclass(frozen=True)
class KLattice:
    """Cell-centred dual lattice k_m = (m + 1/2) delta_k, m = -n/2 .. n/2 - 1.

    The lattice is symmetric about zero and never contains k = 0.
    """
    delta_k: float
    n: int

    @cached_property
    def samples(self) -> np.ndarray:
        k = (np.arange(self.n) - self.n // 2 + 0.5) * self.delta_k
        k.setflags(write=False)
        return k

    @property
    def k_max(self) -> float:
        return float(self.samples[-1])

    def reflect(self, values: np.ndarray) -> np.ndarray:
        """Return values evaluated at -k (index reversal along axis 0)."""
        return values[::-1]

    def positive(self) -> np.ndarray:
        return self.samples > 0
