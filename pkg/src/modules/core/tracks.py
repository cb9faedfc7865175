from dataclasses import dataclass, field
from typing import Tuple
import numpy as np

from .errors import SeparationError
from .grid import Grid1D
from .profiles import PotentialProfile


@dataclass(frozen=True)
class SolitonTrack:
    """Parameters (omega, v, y, gamma) of one moving potential plus its profile."""
    omega: float
    v: float
    y: float
    gamma: float
    profile: PotentialProfile = field(default_factory=PotentialProfile)

    def __post_init__(self):
        if self.omega <= 0:
            raise SeparationError(f"omega must be positive, got {self.omega}")

    def center(self, t: float) -> float:
        return self.y + self.v * t

    def theta(self, t: float, x: np.ndarray) -> np.ndarray:
        """Phase v x / 2 - v^2 t / 4 + omega t + gamma."""
        return self.v * x / 2.0 - self.v ** 2 * t / 4.0 + self.omega * t + self.gamma

    def at_rest(self) -> "SolitonTrack":
        return SolitonTrack(self.omega, 0.0, 0.0, 0.0, self.profile)


@dataclass(frozen=True)
class ModelConfig:
    """Ordered tracks (fastest and rightmost first) with separation thresholds."""
    tracks: Tuple[SolitonTrack, ...]
    l_sep: float = 0.0
    c_sep: float = 0.0
    t_final: float = 1.0
    dt: float = 1e-3

    def __post_init__(self):
        object.__setattr__(self, "tracks", tuple(self.tracks))
        if not self.tracks:
            raise SeparationError("at least one track is required")
        for left, right in zip(self.tracks, self.tracks[1:]):
            if not left.v > right.v:
                raise SeparationError("tracks must be sorted by strictly decreasing velocity")
            if not left.y > right.y:
                raise SeparationError("tracks must be sorted by strictly decreasing position")
        if self.m > 1:
            if self.min_position_gap < self.l_sep:
                raise SeparationError(
                    f"position gap {self.min_position_gap:g} is below the threshold L_sep={self.l_sep:g}"
                )
            if self.min_velocity_gap < self.c_sep:
                raise SeparationError(
                    f"velocity gap {self.min_velocity_gap:g} is below the threshold C_sep={self.c_sep:g}"
                )

    @property
    def m(self) -> int:
        return len(self.tracks)

    @property
    def min_position_gap(self) -> float:
        if self.m < 2:
            return float("inf")
        return min(a.y - b.y for a, b in zip(self.tracks, self.tracks[1:]))

    @property
    def min_velocity_gap(self) -> float:
        if self.m < 2:
            return float("inf")
        return min(a.v - b.v for a, b in zip(self.tracks, self.tracks[1:]))

    def midpoints(self, tau: float = 0.0) -> np.ndarray:
        """Midpoints between consecutive tracks at time tau (decreasing)."""
        return np.array([
            (a.center(tau) + b.center(tau)) / 2.0 for a, b in zip(self.tracks, self.tracks[1:])
        ])

    def check_box(self, grid: Grid1D, margin: float = 10.0) -> None:
        """Require the box to hold every track over [0, t_final]."""
        reach = max(abs(tr.y) for tr in self.tracks) + max(abs(tr.v) for tr in self.tracks) * self.t_final
        needed = 2.0 * reach + margin
        if grid.length < needed:
            raise SeparationError(
                f"box length {grid.length:g} is too small; need at least {needed:g} for t_final={self.t_final:g}"
            )


def moving_potential_eval(track: SolitonTrack, t: float, grid: Grid1D) -> np.ndarray:
    """Matrices [[U, -e^{2i theta} W], [e^{-2i theta} W, -U]] at every node, shape (n_x, 2, 2)."""
    x = grid.x
    z = x - track.center(t)
    u = track.profile.U(z)
    w = track.profile.W(z)
    phase = np.exp(2j * track.theta(t, x))
    out = np.empty((grid.n_x, 2, 2), dtype=np.complex128)
    out[:, 0, 0] = u
    out[:, 0, 1] = -phase * w
    out[:, 1, 0] = np.conj(phase) * w
    out[:, 1, 1] = -u
    return out


def total_potential(config: ModelConfig, t: float, grid: Grid1D) -> np.ndarray:
    total = np.zeros((grid.n_x, 2, 2), dtype=np.complex128)
    for track in config.tracks:
        if not track.profile.is_zero:
            total += moving_potential_eval(track, t, grid)
    return total


def stationary_potential(track: SolitonTrack, x: np.ndarray) -> np.ndarray:
    """Real matrix [[U, -W], [W, -U]] of the potential at rest, shape (len(x), 2, 2)."""
    u = track.profile.U(x)
    w = track.profile.W(x)
    out = np.empty((len(x), 2, 2))
    out[:, 0, 0] = u
    out[:, 0, 1] = -w
    out[:, 1, 0] = w
    out[:, 1, 1] = -u
    return out


def apply_potential(potential: np.ndarray, values: np.ndarray) -> np.ndarray:
    return np.einsum("nij,nj->ni", potential, values)
