from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional
import numpy as np

from ..core.errors import GridError
from ..core.grid import Grid1D
from ..core.tracks import SolitonTrack, stationary_potential


class Stencil(str, Enum):
    FOURIER = "fourier"
    FD2 = "fd2"


@dataclass(frozen=True)
class EigenWindow:
    """Centred periodic sub-window of the grid used for the dense eigensolve.

    The window spans ``span`` grid nodes starting at ``start``; every
    ``stride``-th of them is an eigensolver node.
    """
    grid: Grid1D
    start: int
    span: int
    stride: int

    @property
    def n(self) -> int:
        return self.span // self.stride

    @property
    def h(self) -> float:
        return self.grid.h * self.stride

    @property
    def length(self) -> float:
        return self.span * self.grid.h

    @cached_property
    def x(self) -> np.ndarray:
        return self.grid.x[self.start:self.start + self.span:self.stride]

    def reflection(self) -> np.ndarray:
        """Index map j -> index of -x_j."""
        return (-np.arange(self.n)) % self.n

    def to_grid(self, values: np.ndarray) -> np.ndarray:
        """Trigonometric interpolation onto the full grid; zero outside the window."""
        out = np.zeros((self.grid.n_x,) + values.shape[1:], dtype=np.complex128)
        out[self.start:self.start + self.span] = fourier_resample(values, self.span)
        return out


def fourier_resample(values: np.ndarray, n_out: int) -> np.ndarray:
    """Band-limited resampling of periodic samples along axis 0 (n_out >= n_in)."""
    n_in = values.shape[0]
    if n_out == n_in:
        return np.array(values, dtype=np.complex128)
    spectrum = np.fft.fft(values, axis=0)
    padded = np.zeros((n_out,) + values.shape[1:], dtype=np.complex128)
    half = n_in // 2
    padded[:half] = spectrum[:half]
    padded[n_out - half + 1:] = spectrum[half + 1:]
    # split the Nyquist bin evenly between +-n_in/2
    padded[half] = 0.5 * spectrum[half]
    padded[n_out - half] = 0.5 * spectrum[half]
    return np.fft.ifft(padded, axis=0) * (n_out / n_in)


def eigen_window(grid: Grid1D, half_width: Optional[float] = None, max_nodes: int = 1024) -> EigenWindow:
    centre = grid.index_of(0.0)
    if abs(grid.x[centre]) > 1e-9 * grid.h:
        raise GridError("the eigensolver needs x = 0 on the grid (use a box symmetric about 0)")
    available = min(centre, grid.n_x - centre)
    if half_width is not None:
        available = min(available, int(np.floor(half_width / grid.h)))
    span = 1 << int(np.floor(np.log2(2 * available)))
    if span < 8:
        raise GridError(f"eigen window of {span} nodes is too small")
    stride = max(1, span // max_nodes)
    return EigenWindow(grid=grid, start=centre - span // 2, span=span, stride=stride)


def second_derivative_matrix(n: int, h: float, stencil: Stencil) -> np.ndarray:
    if Stencil(stencil) is Stencil.FD2:
        matrix = -2.0 * np.eye(n) + np.eye(n, k=1) + np.eye(n, k=-1)
        matrix[0, -1] = matrix[-1, 0] = 1.0
        return matrix / (h * h)
    k = 2.0 * np.pi * np.fft.fftfreq(n, d=h)
    return np.real(np.fft.ifft(-(k ** 2)[:, None] * np.fft.fft(np.eye(n), axis=0), axis=0))


def discretize_operator(track: SolitonTrack, window: EigenWindow, stencil: Stencil = Stencil.FOURIER) -> np.ndarray:
    """Real matrix of H = sigma3(-d^2 + omega) + [[U, -W], [W, -U]] on the window nodes.

    Unknowns are ordered (psi1 at all nodes, psi2 at all nodes).
    """
    n = window.n
    laplacian = second_derivative_matrix(n, window.h, stencil)
    potential = stationary_potential(track, window.x)
    u = np.diag(potential[:, 0, 0])
    w = np.diag(potential[:, 1, 0])
    block = -laplacian + track.omega * np.eye(n)
    return np.block([[block + u, -w], [w, -block - u]])

