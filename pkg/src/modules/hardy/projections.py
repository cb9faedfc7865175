import numpy as np

from ..core.grid import KLattice
from .signal import HalfLineSignal, Side


def _twiddle(n: int) -> np.ndarray:
    return np.exp(1j * np.pi * (np.arange(n) - n // 2) / n)


def dual_coefficients(values: np.ndarray) -> np.ndarray:
    """Coefficients on the half-offset dual grid x_q = (q + 1/2) dx, q = -n/2 .. n/2 - 1.

    Row q of the result sits at index q + n/2, so the upper half of the
    array holds x > 0. No dual sample sits at x = 0.
    """
    n = values.shape[0]
    twiddle = _twiddle(n)
    if values.ndim == 2:
        twiddle = twiddle[:, None]
    pretwiddled = values * np.conj(twiddle)
    return np.fft.fftshift(np.fft.fft(np.fft.ifftshift(pretwiddled, axes=0), axis=0), axes=0)


def from_dual_coefficients(coefficients: np.ndarray) -> np.ndarray:
    n = coefficients.shape[0]
    twiddle = _twiddle(n)
    if coefficients.ndim == 2:
        twiddle = twiddle[:, None]
    values = np.fft.fftshift(np.fft.ifft(np.fft.ifftshift(coefficients, axes=0), axis=0), axes=0)
    return values * twiddle


def hardy_project(values: np.ndarray, side: Side) -> np.ndarray:
    """Keep the part of f(k) = sum a(x) e^{ikx} with x > 0 (plus) or x < 0 (minus)."""
    values = np.asarray(values, dtype=np.complex128)
    coefficients = dual_coefficients(values)
    n = values.shape[0]
    keep = np.zeros(n, dtype=bool)
    if Side(side) is Side.PLUS:
        keep[n // 2:] = True
    else:
        keep[:n // 2] = True
    if values.ndim == 2:
        keep = keep[:, None]
    return from_dual_coefficients(np.where(keep, coefficients, 0.0))


def project_plus(values: np.ndarray, lattice: KLattice) -> HalfLineSignal:
    return HalfLineSignal(lattice, hardy_project(values, Side.PLUS), Side.PLUS)


def project_minus(values: np.ndarray, lattice: KLattice) -> HalfLineSignal:
    return HalfLineSignal(lattice, hardy_project(values, Side.MINUS), Side.MINUS)


def project(values: np.ndarray, lattice: KLattice, side: Side) -> HalfLineSignal:
    return HalfLineSignal(lattice, hardy_project(values, side), side)
