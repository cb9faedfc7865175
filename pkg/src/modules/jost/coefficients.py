from typing import Tuple
import numpy as np

from ..core.grid import Grid1D
from ..core.profiles import PotentialProfile
from .errors import FitIllConditioned


def matching_radius(profile: PotentialProfile, grid: Grid1D, envelope_tol: float = 1e-10) -> float:
    """Distance of the matching stations from the potential centre."""
    half_width = min(-grid.x_min, grid.x_max)
    return min(0.45 * half_width, profile.support_radius(envelope_tol))


def station_indices(grid: Grid1D, radius: float, count: int = 32) -> Tuple[np.ndarray, np.ndarray]:
    """Node indices of the left and right matching stations, each running outward from +-radius."""
    right_start = int(np.searchsorted(grid.x, radius))
    left_stop = int(np.searchsorted(grid.x, -radius, side="right"))
    count = max(2, min(count, grid.n_x - right_start, left_stop))
    right = np.arange(right_start, right_start + count)
    left = np.arange(left_stop - count, left_stop)
    return left, right


def plane_wave_fit(x: np.ndarray, values: np.ndarray, k: float,
                   max_condition: float = 1e8) -> Tuple[complex, complex]:
    """Least-squares (alpha, beta) with values ~ alpha e^{ikx} + beta e^{-ikx}."""
    design = np.stack([np.exp(1j * k * x), np.exp(-1j * k * x)], axis=-1)
    condition = np.linalg.cond(design)
    if not np.isfinite(condition) or condition > max_condition:
        raise FitIllConditioned(k, float(condition))
    (alpha, beta), *_ = np.linalg.lstsq(design, values, rcond=None)
    return complex(alpha), complex(beta)


def extract_coefficients(F: np.ndarray, grid: Grid1D, k: float, left: np.ndarray, right: np.ndarray,
                         max_condition: float = 1e8) -> Tuple[complex, complex]:
    """Read s(k) and r(k) off the first component of F(x, k).

    F ~ s e^{ikx} on the right and e^{ikx} + r e^{-ikx} on the left.
    """
    x = grid.x
    s, _ = plane_wave_fit(x[right], F[right, 0], k, max_condition)
    _, r = plane_wave_fit(x[left], F[left, 0], k, max_condition)
    return s, r
