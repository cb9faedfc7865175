from typing import List
import numpy as np
from scipy.special import erf

from .grid import Grid1D
from .tracks import ModelConfig


def ramp(x: np.ndarray, center: float, eps: float) -> np.ndarray:
    """Smooth step rising from 0 to 1 across [center - eps, center + eps]."""
    return 0.5 * (1.0 + erf((x - center) / eps))


def track_windows(config: ModelConfig, grid: Grid1D, tau: float = 0.0, eps: float = 1.0) -> List[np.ndarray]:
    """Partition of unity chi_1..chi_m, chi_1 around the rightmost track.

    Window edges sit at the midpoints between consecutive tracks at time tau.
    """
    x = grid.x
    cuts = config.midpoints(tau)
    if config.m == 1:
        return [np.ones_like(x)]
    steps = [ramp(x, c, eps) for c in cuts]
    windows = [steps[0]]
    for ell in range(1, config.m - 1):
        windows.append(steps[ell] - steps[ell - 1])
    windows.append(1.0 - steps[-1])
    return windows
