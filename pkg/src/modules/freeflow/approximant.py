from dataclasses import dataclass
from typing import List
import numpy as np

from ..core.fields import SpinorField
from ..core.galilei import galilei_apply
from ..core.grid import Grid1D
from ..core.norms import h1_norm, l2_norm, spectral_derivative
from ..core.tracks import SolitonTrack, apply_potential, total_potential
from ..core.windows import track_windows
from ..dft.flat import flat_F0
from ..dft.frequency import FrequencyPair
from ..dft.transforms import forward_Fhat, forward_Ghat
from ..jost.data import ScatteringData
from .profiles import ProfileFamily, boost


def evolve_frequency(u: FrequencyPair, t: float, omega: float = 0.0) -> FrequencyPair:
    """e^{-it(k^2 + omega) sigma3} u."""
    energy = u.k ** 2 + omega
    return u.with_values(u.values * np.exp(-1j * t * np.outer(energy, [1.0, -1.0])))


def track_term(family: ProfileFamily, index: int, t: float) -> SpinorField:
    """Contribution of one track: the Galilei image of G-hat applied to its boosted, evolved profile."""
    track = family.config.tracks[index]
    data = family.data[index]
    boosted = boost(family.per_ell[index], track, data)
    rest = forward_Ghat(evolve_frequency(boosted, t, track.omega), data)
    return galilei_apply(track, rest, t)


def flat_term(family: ProfileFamily, t: float, grid: Grid1D) -> SpinorField:
    return flat_F0(evolve_frequency(family.aggregate, t), grid)


def eval_S(family: ProfileFamily, t: float) -> SpinorField:
    """Approximate free flow S(t) phi: per-track distorted waves minus the double-counted flat waves."""
    grid = family.data[0].grid
    total = SpinorField.zeros(grid)
    for index in range(family.m):
        total = total + track_term(family, index, t)
    return total - flat_term(family, t, grid)


def lab_operator(family: ProfileFamily, f: SpinorField, t: float) -> SpinorField:
    """sigma3 f_xx - V(t) f, so that i f_t + lab_operator(f) vanishes on exact solutions."""
    second = spectral_derivative(f, 2)
    potential = total_potential(family.config, t, f.grid)
    return second.sigma3() - f.with_values(apply_potential(potential, f.values))


@dataclass(frozen=True)
class ResidualSample:
    t: float
    residual: float
    relative: float
    size: float


DT_RES = 1e-4


def residual_field(family: ProfileFamily, t: float, dt_res: float = DT_RES) -> SpinorField:
    """i dS/dt + sigma3 S_xx - V S, with dS/dt a centred difference of step dt_res."""
    ahead = eval_S(family, t + dt_res)
    behind = eval_S(family, t - dt_res)
    time_derivative = (ahead - behind) * (1.0 / (2.0 * dt_res))
    return time_derivative * 1j + lab_operator(family, eval_S(family, t), t)


def residual_of_S(family: ProfileFamily, t: float, dt_res: float = DT_RES) -> ResidualSample:
    now = eval_S(family, t)
    residual = residual_field(family, t, dt_res)
    size = h1_norm(now)
    value = h1_norm(residual)
    return ResidualSample(t=t, residual=value, relative=value / max(size, 1e-300), size=size)


def residual_trace(family: ProfileFamily, times: np.ndarray, dt_res: float = DT_RES) -> List[ResidualSample]:
    return [residual_of_S(family, float(t), dt_res) for t in times]


def transition_defect(family: ProfileFamily, index: int) -> float:
    """Relative L2 gap between G-hat of profile l and F-hat of profile l-1, both boosted by track l."""
    if not 1 <= index < family.m:
        raise ValueError(f"transition index must lie in [1, {family.m - 1}], got {index}")
    track: SolitonTrack = family.config.tracks[index]
    data: ScatteringData = family.data[index]
    left = forward_Ghat(boost(family.per_ell[index], track, data), data)
    right = forward_Fhat(boost(family.per_ell[index - 1], track, data), data)
    return l2_norm(left - right) / max(l2_norm(left), 1e-300)


def coercivity_ratio(family: ProfileFamily) -> float:
    """||S(0) phi|| / sum_l ||phi_l||; bounded below when the tracks are well separated."""
    denominator = sum(family.norms())
    if denominator == 0.0:
        return 0.0
    return l2_norm(eval_S(family, 0.0)) / denominator


def localization_defect(family: ProfileFamily, tau: float = 0.0, eps: float = 1.0) -> List[float]:
    """Per track, ||chi_l (S(tau) phi - term_l)|| relative to ||S(tau) phi||."""
    field = eval_S(family, tau)
    scale = max(l2_norm(field), 1e-300)
    out = []
    for index, chi in enumerate(track_windows(family.config, field.grid, tau, eps)):
        difference = field - track_term(family, index, tau)
        out.append(l2_norm(difference.with_values(chi[:, None] * difference.values)) / scale)
    return out
