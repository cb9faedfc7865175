from typing import Callable, Dict, Iterable
import numpy as np

from .projections import hardy_project
from .signal import HalfLineSignal

Multiplier = Callable[[np.ndarray], np.ndarray]


def leakage_estimate(signal: HalfLineSignal, multiplier: Multiplier, y0: float, h0: float = 0.0) -> float:
    """||P_opposite(e^{+-i y0 k} m(k + h0) f(k))|| for a signal tagged + or -."""
    k = signal.lattice.samples
    factor = np.exp(1j * signal.side.sign * y0 * k) * multiplier(k + h0)
    if signal.values.ndim == 2:
        factor = factor[:, None]
    leaked = hardy_project(factor * signal.values, signal.side.opposite)
    return float(np.sqrt(signal.lattice.delta_k * np.sum(np.abs(leaked) ** 2)))


def leakage_sweep(signal: HalfLineSignal, multiplier: Multiplier, separations: Iterable[float],
                  h0: float = 0.0) -> Dict[float, float]:
    return {float(y0): leakage_estimate(signal, multiplier, y0, h0) for y0 in separations}


def unit_multiplier(k: np.ndarray) -> np.ndarray:
    return np.ones_like(k, dtype=np.complex128)
