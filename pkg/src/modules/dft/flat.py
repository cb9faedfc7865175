import numpy as np

from ..core.fields import SpinorField
from ..core.grid import Grid1D, KLattice
from .frequency import FrequencyPair


def _check_lattice(grid: Grid1D, lattice: KLattice) -> None:
    if not np.isclose(lattice.delta_k, grid.delta_k, rtol=1e-12, atol=0.0):
        raise ValueError("lattice spacing does not match the grid's dual spacing")
    if lattice.n > grid.n_x:
        raise ValueError("lattice is larger than the grid")


def _lattice_indices(grid: Grid1D, lattice: KLattice) -> np.ndarray:
    return np.arange(lattice.n) - lattice.n // 2


def flat_F0(u: FrequencyPair, grid: Grid1D) -> SpinorField:
    """F0(u)(x) = (1/sqrt(2 pi)) sum_k dk e^{ikx} u(k), evaluated by one inverse FFT."""
    lattice = u.lattice
    _check_lattice(grid, lattice)
    n = grid.n_x
    m = _lattice_indices(grid, lattice)
    coefficients = np.zeros((n, 2), dtype=np.complex128)
    coefficients[m % n] = u.values * np.exp(1j * (m + 0.5) * lattice.delta_k * grid.x_min)[:, None]
    twiddle = np.exp(1j * np.pi * np.arange(n) / n)
    values = (lattice.delta_k / np.sqrt(2.0 * np.pi)) * n * twiddle[:, None] * np.fft.ifft(coefficients, axis=0)
    return SpinorField(grid, values)


def flat_F0_adjoint(f: SpinorField, lattice: KLattice) -> FrequencyPair:
    """F0*(f)(k) = (1/sqrt(2 pi)) sum_x h e^{-ikx} f(x) on the lattice."""
    grid = f.grid
    _check_lattice(grid, lattice)
    n = grid.n_x
    twiddle = np.exp(-1j * np.pi * np.arange(n) / n)
    spectrum = np.fft.fft(f.values * twiddle[:, None], axis=0)
    m = _lattice_indices(grid, lattice)
    values = (grid.h / np.sqrt(2.0 * np.pi)) * np.exp(-1j * (m + 0.5) * lattice.delta_k * grid.x_min)[:, None] * spectrum[m % n]
    return FrequencyPair(lattice, values)


def shift_frequency(u: FrequencyPair, shifts: np.ndarray, grid: Grid1D) -> FrequencyPair:
    """Componentwise u_j(k + a_j) by modulation in x; content pushed past the lattice edge is lost."""
    shifts = np.broadcast_to(np.asarray(shifts, dtype=float), (2,))
    if not np.any(shifts):
        return u
    modulation = np.exp(-1j * np.outer(grid.x, shifts))
    field = flat_F0(u, grid)
    return flat_F0_adjoint(field.with_values(field.values * modulation), u.lattice)


def frequency_phase(u: FrequencyPair, positions: np.ndarray) -> FrequencyPair:
    """Componentwise e^{i k y_j} u_j(k)."""
    positions = np.broadcast_to(np.asarray(positions, dtype=float), (2,))
    return u.with_values(u.values * np.exp(1j * np.outer(u.k, positions)))
