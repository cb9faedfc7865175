from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import numpy as np

from ..core.fields import SpinorField
from ..core.galilei import galilei_unwind
from ..core.grid import Grid1D, KLattice
from ..core.tracks import ModelConfig
from ..core.windows import ramp, track_windows
from ..dft.flat import flat_F0, flat_F0_adjoint, frequency_phase
from ..dft.frequency import FrequencyPair
from ..dft.transforms import inverse_Fhat, inverse_Ghat
from ..hardy.projections import hardy_project
from ..hardy.signal import HalfLineSignal, Side
from ..jost.data import ScatteringData


# A frequency profile u(k) = sum_X f(X) e^{-ikX} carries field content at X on the
# Hardy side of -X, so content right of a cut is MINUS-class after centring on it.
RIGHT = Side.MINUS
LEFT = Side.PLUS


def centred(u: FrequencyPair, cut: float) -> np.ndarray:
    """Samples of u with the field translated so that the cut sits at X = 0."""
    return frequency_phase(u, np.array([cut, cut])).values


def uncentred(values: np.ndarray, lattice: KLattice, cut: float) -> FrequencyPair:
    return frequency_phase(FrequencyPair(lattice, values), np.array([-cut, -cut]))


def half_line(u: FrequencyPair, cut: float, side: Side) -> HalfLineSignal:
    """Part of u whose field lies right (MINUS) or left (PLUS) of the cut, stored centred on the cut."""
    return HalfLineSignal(u.lattice, hardy_project(centred(u, cut), side), side)


def from_half_line(signal: HalfLineSignal, cut: float) -> FrequencyPair:
    return uncentred(signal.values, signal.lattice, cut)


def smooth_split(u: FrequencyPair, cut: float, eps: float, grid: Grid1D) -> Tuple[FrequencyPair, FrequencyPair]:
    """(left, right) pieces F0*((1 - ramp) F0 u) and F0*(ramp F0 u); they add up to u."""
    field = flat_F0(u, grid)
    step = ramp(grid.x, cut, eps)[:, None]
    right = flat_F0_adjoint(field.with_values(step * field.values), u.lattice)
    return u - right, right


@dataclass(frozen=True)
class BMaps:
    """Windowed, Galilei-unwound distorted transforms of a field, one pair per track.

    ``g_side[l]`` is G-hat^{-1} of the l-th window in the rest frame of track l
    and ``f_side[l]`` the matching F-hat^{-1}.
    """
    g_side: Tuple[FrequencyPair, ...]
    f_side: Tuple[FrequencyPair, ...]
    cuts: np.ndarray
    eps: float

    def norm(self) -> float:
        return float(np.sqrt(sum(u.norm() ** 2 for u in (*self.g_side, *self.f_side))))


def _window_transforms(f: SpinorField, chi: np.ndarray, index: int, config: ModelConfig,
                       data: ScatteringData) -> Tuple[FrequencyPair, FrequencyPair]:
    track = config.tracks[index]
    windowed = f.with_values(chi[:, None] * f.values)
    rest = galilei_unwind(track, windowed, 0.0)
    return inverse_Ghat(rest, data), inverse_Fhat(rest, data)


def assemble_B_maps(f: SpinorField, config: ModelConfig, data: Sequence[ScatteringData], eps: float = 1.0,
                    threads: Optional[int] = None) -> BMaps:
    """Cut f with the smooth track windows at t = 0 and take both distorted transforms per window."""
    if len(data) != config.m:
        raise ValueError(f"expected {config.m} scattering tables, got {len(data)}")
    windows = track_windows(config, f.grid, 0.0, eps)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_window_transforms, f, chi, index, config, data[index])
            for index, chi in enumerate(windows)
        ]
        results = [future.result() for future in futures]
    return BMaps(
        g_side=tuple(g for g, _ in results),
        f_side=tuple(h for _, h in results),
        cuts=config.midpoints(0.0),
        eps=eps,
    )


def window_pieces(phi: FrequencyPair, config: ModelConfig, grid: Grid1D, eps: float = 1.0) -> List[FrequencyPair]:
    """F0* of each window applied to F0 phi; a cross-check for B-maps of free fields."""
    field = flat_F0(phi, grid)
    return [
        flat_F0_adjoint(field.with_values(chi[:, None] * field.values), phi.lattice)
        for chi in track_windows(config, grid, 0.0, eps)
    ]
