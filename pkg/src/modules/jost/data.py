from dataclasses import dataclass, field
from functools import cached_property
import hashlib
import json
import numpy as np
from scipy.interpolate import CubicSpline

from ..core.grid import Grid1D, KLattice
from ..core.tracks import SolitonTrack


def table_hash(track: SolitonTrack, grid: Grid1D, lattice: KLattice, k_floor: float,
               support_tol: float, refine: int) -> str:
    """Content hash of everything a scattering table depends on."""
    profile = track.profile
    content = {
        "profile": {
            "kind": profile.kind.value,
            "u_amplitude": profile.u_amplitude,
            "w_amplitude": profile.w_amplitude,
            "width": profile.width,
            "omega": profile.omega,
        },
        "omega": track.omega,
        "grid": [grid.x_min, grid.x_max, grid.n_x],
        "lattice": [lattice.delta_k, lattice.n],
        "k_floor": k_floor,
        "support_tol": support_tol,
        "refine": refine,
    }
    return hashlib.md5(json.dumps(content, sort_keys=True).encode()).hexdigest()


def lagrange_weights(nodes: np.ndarray, target: float) -> np.ndarray:
    weights = np.ones(len(nodes))
    for j, node in enumerate(nodes):
        for other in np.delete(nodes, j):
            weights[j] *= (target - other) / (node - other)
    return weights


def extrapolate_punctured(values: np.ndarray, k: np.ndarray, punctured: np.ndarray, degree: int = 2) -> np.ndarray:
    """Replace samples with |k| < k_floor by one-sided polynomial extrapolation along axis 0.

    Each punctured sample uses the ``degree + 1`` nearest clean samples on
    its own side of k = 0.
    """
    if not np.any(punctured):
        return values
    out = np.array(values)
    clean = ~punctured
    for index in np.nonzero(punctured)[0]:
        side = np.nonzero(clean & (np.sign(k) == np.sign(k[index])))[0]
        if side.size < degree + 1:
            continue
        nearest = side[np.argsort(np.abs(k[side] - k[index]))[:degree + 1]]
        weights = lagrange_weights(k[nearest], k[index])
        out[index] = np.tensordot(weights, values[nearest], axes=(0, 0))
    return out


@dataclass(frozen=True, eq=False)
class ScatteringData:
    """Jost tables and scattering coefficients of one potential at rest.

    ``jost_F[m]`` holds F(x, k_m) and ``jost_G[m]`` holds G(x, k_m) on the
    full grid, shape (n_k, n_x, 2). Samples with |k| < k_floor stay in the
    table but are flagged as punctured. Where a punctured sample also has
    |s| below ``s_guard`` the kernels F/s and G(-k)/s(-k) are extrapolated
    from the clean samples on the same side instead of divided.
    """
    track: SolitonTrack
    grid: Grid1D
    lattice: KLattice
    s: np.ndarray
    r: np.ndarray
    jost_F: np.ndarray
    jost_G: np.ndarray
    k_floor: float = 0.05
    s_guard: float = 1e-6
    residuals: np.ndarray = field(default=None)
    content_hash: str = ""

    def __post_init__(self):
        n_k, n_x = self.lattice.n, self.grid.n_x
        for name, shape in (("s", (n_k,)), ("r", (n_k,)), ("jost_F", (n_k, n_x, 2)), ("jost_G", (n_k, n_x, 2))):
            array = np.asarray(getattr(self, name), dtype=np.complex128)
            if array.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {array.shape}")
            array.setflags(write=False)
            object.__setattr__(self, name, array)
        if self.residuals is None:
            object.__setattr__(self, "residuals", np.zeros(n_k))

    @property
    def omega(self) -> float:
        return self.track.omega

    @property
    def k_samples(self) -> np.ndarray:
        return self.lattice.samples

    @cached_property
    def punctured(self) -> np.ndarray:
        return np.abs(self.k_samples) < self.k_floor

    def _guarded(self, transmission: np.ndarray) -> np.ndarray:
        return self.punctured & (np.abs(transmission) < self.s_guard)

    @cached_property
    def kernel_F(self) -> np.ndarray:
        """F(x, k) / s(k)."""
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = self.jost_F / self.s[:, None, None]
        guarded = self._guarded(self.s)
        ratio[guarded] = 0.0
        return extrapolate_punctured(ratio, self.k_samples, guarded)

    @cached_property
    def kernel_G(self) -> np.ndarray:
        """G(x, -k) / s(-k), row m belonging to k_m."""
        reflected_s = self.lattice.reflect(self.s)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = self.lattice.reflect(self.jost_G) / reflected_s[:, None, None]
        guarded = self._guarded(reflected_s)
        ratio[guarded] = 0.0
        return extrapolate_punctured(ratio, self.k_samples, guarded)

    @cached_property
    def _splines(self):
        k = self.k_samples
        return CubicSpline(k, self.s), CubicSpline(k, self.r)

    def s_at(self, k: np.ndarray) -> np.ndarray:
        """Transmission at arbitrary real k; 1 outside the tabulated range."""
        k = np.asarray(k, dtype=float)
        inside = np.abs(k) <= self.lattice.k_max
        return np.where(inside, self._splines[0](np.clip(k, -self.lattice.k_max, self.lattice.k_max)), 1.0)

    def r_at(self, k: np.ndarray) -> np.ndarray:
        """Reflection at arbitrary real k; 0 outside the tabulated range."""
        k = np.asarray(k, dtype=float)
        inside = np.abs(k) <= self.lattice.k_max
        return np.where(inside, self._splines[1](np.clip(k, -self.lattice.k_max, self.lattice.k_max)), 0.0)

    def index_of(self, k: float) -> int:
        return int(np.argmin(np.abs(self.k_samples - k)))

    def punctured_mass(self, values: np.ndarray) -> float:
        """Fraction of the l2 mass of a frequency array carried by punctured samples."""
        total = float(np.sum(np.abs(values) ** 2))
        if total == 0.0:
            return 0.0
        return float(np.sum(np.abs(values[self.punctured]) ** 2)) / total
