from dataclasses import dataclass
from typing import List, Sequence, Tuple
import numpy as np

from ..core.tracks import ModelConfig, SolitonTrack
from ..dft.flat import frequency_phase, shift_frequency
from ..dft.frequency import FrequencyPair
from ..jost.data import ScatteringData
from .errors import SmallTransmission

# profile samples below this fraction of the peak never trigger SmallTransmission
_NEGLIGIBLE = 1e-6


@dataclass(frozen=True)
class ProfileFamily:
    """Seed profile, the per-track profiles built from it and their aggregate."""
    phi: FrequencyPair
    per_ell: Tuple[FrequencyPair, ...]
    aggregate: FrequencyPair
    config: ModelConfig
    data: Tuple[ScatteringData, ...]

    @property
    def m(self) -> int:
        return len(self.per_ell)

    def norms(self) -> List[float]:
        return [phi.norm() for phi in self.per_ell]


def _rest_frame_step(rest: FrequencyPair, data: ScatteringData) -> np.ndarray:
    """u(k) - r(k) u(-k) on the lattice of the table."""
    return rest.values - data.r[:, None] * rest.reflect().values


def recursion_step(u: FrequencyPair, track: SolitonTrack, data: ScatteringData,
                   s_min: float = 1e-3, track_index: int = 0) -> FrequencyPair:
    """Profile seen by the next potential: divide out its transmission and remove the reflected part.

    The step is taken in the rest frame of ``track``, where it reads
    w(k) = (u(k) - r(k) u(-k)) / s(k) and only needs the tabulated
    coefficients. Read back in lab frequencies this is

        w1(k) = (u1(k) - c(k) u1(v - k)) / s(k - v/2)
        w2(k) = (u2(k) - c(k) u2(-k - v)) / s(k + v/2)

    with c = r(kappa) e^{-2 i y kappa} at the same shifted argument kappa.
    """
    rest = boost(u, track, data)
    numerator = _rest_frame_step(rest, data)
    s = np.broadcast_to(data.s[:, None], numerator.shape)
    peak = np.abs(rest.values).max()
    relevant = np.abs(numerator) > _NEGLIGIBLE * max(peak, np.abs(numerator).max())
    small = relevant & (np.abs(s) < s_min)
    if np.any(small):
        raise SmallTransmission(track_index, float(np.abs(s)[small].min()), s_min)
    safe = np.where(np.abs(s) < s_min, 1.0, s)
    values = np.where(relevant | (np.abs(s) >= s_min), numerator / safe, 0.0)
    return unboost(rest.with_values(values), track, data)


def inverse_recursion_step(u: FrequencyPair, track: SolitonTrack, data: ScatteringData) -> FrequencyPair:
    """Undo recursion_step: with a = s w, u = (a(k) + r(k) a(-k)) / (1 - r(k) r(-k))."""
    rest = boost(u, track, data)
    s = data.s[:, None]
    r = data.r[:, None]
    scaled = rest.with_values(rest.values * s)
    determinant = 1.0 - r * data.lattice.reflect(r)
    values = (scaled.values + r * scaled.reflect().values) / determinant
    return unboost(rest.with_values(values), track, data)


def threshold_frequencies(config: ModelConfig, generic: Sequence[bool]) -> Tuple[np.ndarray, np.ndarray]:
    """Lab frequencies where a seed has to vanish for every step to stay bounded.

    A track with a generic threshold has s = 0 at rest frequency zero,
    i.e. at k = v/2 in the first component and k = -v/2 in the second.
    Profile l inherits its zeros from profile l-1 through the mirror of
    each earlier reflecting track, k -> v_j - k and k -> -v_j - k.
    """
    if len(generic) != config.m:
        raise ValueError(f"expected {config.m} threshold flags, got {len(generic)}")
    first: set = set()
    second: set = set()
    for ell, track in enumerate(config.tracks):
        if not generic[ell]:
            continue
        upper = {track.v / 2.0}
        lower = {-track.v / 2.0}
        for j in range(ell - 1, 0, -1):
            mirror = config.tracks[j]
            if mirror.profile.is_zero:
                continue
            upper |= {mirror.v - point for point in upper}
            lower |= {-mirror.v - point for point in lower}
        first |= upper
        second |= lower
    return np.array(sorted(first)), np.array(sorted(second))


def recurse_profiles(phi: FrequencyPair, config: ModelConfig, data: Sequence[ScatteringData],
                     s_min: float = 1e-3) -> ProfileFamily:
    """Build phi_1 = phi and then phi_l from phi_{l-1} through the potential of track l.

    Indices are 1-based in the docstrings and 0-based in ``per_ell``: entry
    ell holds the profile of track ell, produced by stepping entry ell - 1
    through the table of that same track.
    """
    if len(data) != config.m:
        raise ValueError(f"expected {config.m} scattering tables, got {len(data)}")
    per_ell = [phi]
    for ell in range(1, config.m):
        per_ell.append(recursion_step(per_ell[ell - 1], config.tracks[ell], data[ell], s_min, ell + 1))
    aggregate = FrequencyPair.zeros(phi.lattice)
    for profile in per_ell[:-1]:
        aggregate = aggregate + profile
    return ProfileFamily(phi=phi, per_ell=tuple(per_ell), aggregate=aggregate, config=config, data=tuple(data))


def recursion_defect(family: ProfileFamily, s_min: float = 1e-3) -> float:
    """Largest relative change when each step is re-applied to the stored profiles."""
    worst = 0.0
    for ell in range(1, family.m):
        again = recursion_step(family.per_ell[ell - 1], family.config.tracks[ell], family.data[ell], s_min, ell + 1)
        scale = max(family.per_ell[ell].norm(), 1e-300)
        worst = max(worst, (again - family.per_ell[ell]).norm() / scale)
    return worst


def boost(u: FrequencyPair, track: SolitonTrack, data: ScatteringData) -> FrequencyPair:
    """e^{-i gamma sigma3} (e^{iyk} u1(k + v/2), e^{iyk} u2(k - v/2))."""
    shifted = shift_frequency(u, np.array([track.v / 2.0, -track.v / 2.0]), data.grid)
    phased = frequency_phase(shifted, np.array([track.y, track.y]))
    return phased.with_values(phased.values * np.exp(-1j * track.gamma * np.array([1.0, -1.0])))


def unboost(u: FrequencyPair, track: SolitonTrack, data: ScatteringData) -> FrequencyPair:
    """Inverse of boost."""
    rotated = u.with_values(u.values * np.exp(1j * track.gamma * np.array([1.0, -1.0])))
    unphased = frequency_phase(rotated, np.array([-track.y, -track.y]))
    return shift_frequency(unphased, np.array([-track.v / 2.0, track.v / 2.0]), data.grid)
