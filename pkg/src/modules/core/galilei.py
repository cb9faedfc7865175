import numpy as np

from .fields import SpinorField
from .grid import Grid1D
from .tracks import SolitonTrack


def spectral_shift(grid: Grid1D, values: np.ndarray, displacement: float,
                   antiperiodic: bool = False) -> np.ndarray:
    """Band-limited translation g(x) -> g(x - displacement) along axis 0.

    With ``antiperiodic`` the values are read as one period of a field with
    g(x + L) = -g(x), which is what synthesis on the half-shifted lattice
    produces. The twist e^{-i pi (x - x_min) / L} makes such a field periodic
    before the FFT shift and is put back afterwards.
    """
    if displacement == 0.0:
        return np.array(values, dtype=np.complex128)
    if antiperiodic:
        half = 0.5 * grid.delta_k
        twist = np.exp(1j * half * (grid.x - grid.x_min))
        if values.ndim == 2:
            twist = twist[:, None]
        periodic = spectral_shift(grid, values * np.conj(twist), displacement)
        return periodic * twist * np.exp(-1j * half * displacement)
    multiplier = np.exp(-1j * grid.k_fft * displacement)
    if values.ndim == 2:
        multiplier = multiplier[:, None]
    return np.fft.ifft(np.fft.fft(values, axis=0) * multiplier, axis=0)


def _phase_pair(track: SolitonTrack, t: float, x: np.ndarray) -> np.ndarray:
    phase = np.exp(1j * track.theta(t, x))
    return np.stack([phase, np.conj(phase)], axis=-1)


def galilei_apply(track: SolitonTrack, g: SpinorField, t: float) -> SpinorField:
    """e^{i sigma3 theta(t, x)} g(x - v t - y)."""
    shifted = spectral_shift(g.grid, g.values, track.center(t), antiperiodic=True)
    return g.with_values(shifted * _phase_pair(track, t, g.grid.x))


def galilei_unwind(track: SolitonTrack, f: SpinorField, t: float) -> SpinorField:
    """Inverse of galilei_apply: back to the frame of the potential at rest."""
    rotated = f.values * np.conj(_phase_pair(track, t, f.grid.x))
    return f.with_values(spectral_shift(f.grid, rotated, -track.center(t), antiperiodic=True))


def free_evolve(g: SpinorField, t: float, omega: float = 0.0) -> SpinorField:
    """Exact flow of i psi_t = sigma3 (-d^2 + omega) psi on the periodic grid."""
    energy = g.grid.k_fft ** 2 + omega
    multiplier = np.stack([np.exp(-1j * energy * t), np.exp(1j * energy * t)], axis=-1)
    spectrum = np.fft.fft(g.values, axis=0) * multiplier
    return g.with_values(np.fft.ifft(spectrum, axis=0))
