from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional
import numpy as np

from ..core.fields import SpinorField
from ..core.grid import Grid1D
from ..core.norms import l2_norm
from ..core.tracks import ModelConfig, total_potential
from ..logging.base import BaseLogger
from .errors import CFLViolation, UnstableRun


@dataclass(frozen=True)
class StepSettings:
    """Time stepping knobs; ``k_max`` is the largest resolved frequency used by the CFL check."""
    dt: float = 1e-3
    k_max: float = 8.0
    sponge: bool = False
    sponge_fraction: float = 0.1
    sponge_strength: float = 2.0
    growth_limit: Optional[float] = 0.1

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not 0.0 < self.sponge_fraction < 0.5:
            raise ValueError(f"sponge_fraction must lie in (0, 0.5), got {self.sponge_fraction}")


def sponge_profile(grid: Grid1D, fraction: float, strength: float) -> np.ndarray:
    """Absorption rate rising smoothly from 0 to strength across the outer fraction of the box."""
    width = fraction * grid.length
    inner = grid.length / 2.0 - width
    center = (grid.x_min + grid.x_max) / 2.0
    depth = np.clip((np.abs(grid.x - center) - inner) / width, 0.0, 1.0)
    return strength * np.sin(0.5 * np.pi * depth) ** 2


def potential_exponential(generator: np.ndarray) -> np.ndarray:
    """exp(A) for trace-free 2x2 matrices A stacked along axis 0.

    A^2 = -det(A) I, so exp(A) = cosh(mu) I + sinh(mu)/mu A with mu^2 = -det(A).
    """
    det = generator[:, 0, 0] * generator[:, 1, 1] - generator[:, 0, 1] * generator[:, 1, 0]
    mu = np.sqrt(-det + 0j)
    small = np.abs(mu) < 1e-8
    safe = np.where(small, 1.0, mu)
    sinhc = np.where(small, 1.0 + mu ** 2 / 6.0, np.sinh(safe) / safe)
    out = sinhc[:, None, None] * generator
    out[:, 0, 0] += np.cosh(mu)
    out[:, 1, 1] += np.cosh(mu)
    return out


def cfl_bound(config: ModelConfig, grid: Grid1D, k_max: float) -> float:
    """0.5 / max(k_max^2 / 2, sup |V|)."""
    potential = total_potential(config, 0.0, grid)
    sup_v = float(np.abs(potential).sum(axis=2).max()) if potential.size else 0.0
    return 0.5 / max(k_max ** 2 / 2.0, sup_v, 1e-300)


class SplitStepPropagator:
    """Strang splitting for i psi_t = -sigma3 psi_xx + V(t) psi on the periodic grid.

    Half kinetic step, exact potential exponential at the step midpoint,
    half kinetic step. With the sponge on, a scalar absorption acts
    alongside the potential substep.
    """

    def __init__(self, config: ModelConfig, grid: Grid1D, settings: Optional[StepSettings] = None,
                 logger: Optional[BaseLogger] = None):
        self.config = config
        self.grid = grid
        self.settings = settings or StepSettings()
        self.logger = logger
        bound = cfl_bound(config, grid, self.settings.k_max)
        if self.settings.dt > bound:
            raise CFLViolation(self.settings.dt, bound)
        self._damping = (
            sponge_profile(grid, self.settings.sponge_fraction, self.settings.sponge_strength)
            if self.settings.sponge else None
        )

    def _kinetic(self, values: np.ndarray, dt: float) -> np.ndarray:
        phase = self.grid.k_fft ** 2 * dt
        multiplier = np.stack([np.exp(-1j * phase), np.exp(1j * phase)], axis=-1)
        return np.fft.ifft(np.fft.fft(values, axis=0) * multiplier, axis=0)

    def _potential(self, values: np.ndarray, t_mid: float, dt: float) -> np.ndarray:
        generator = -1j * dt * total_potential(self.config, t_mid, self.grid)
        out = np.einsum("nij,nj->ni", potential_exponential(generator), values)
        if self._damping is not None:
            out *= np.exp(-self._damping * dt)[:, None]
        return out

    def step(self, values: np.ndarray, t: float, dt: float) -> np.ndarray:
        half = self._kinetic(values, dt / 2.0)
        return self._kinetic(self._potential(half, t + dt / 2.0, dt), dt / 2.0)

    def evolve(self, psi0: SpinorField, tau: float, times: Iterable[float],
               observer: Optional[Callable[[float, SpinorField], None]] = None) -> List[SpinorField]:
        """March from tau through the increasing record times and return the field at each."""
        if psi0.grid != self.grid:
            raise ValueError("initial field lives on a different grid")
        times = [float(t) for t in times]
        if any(b < a for a, b in zip([tau] + times, times)):
            raise ValueError("record times must be increasing and not before tau")
        initial = l2_norm(psi0)
        limit = self.settings.growth_limit
        values = np.array(psi0.values)
        current = tau
        out = []
        for target in times:
            span = target - current
            n_steps = int(np.ceil(span / self.settings.dt - 1e-9)) if span > 0 else 0
            for _ in range(n_steps):
                dt = span / n_steps
                values = self.step(values, current, dt)
                current += dt
            current = target
            snapshot = psi0.with_values(values)
            if limit is not None and initial > 0.0:
                ratio = l2_norm(snapshot) / initial
                if ratio > 1.0 + limit:
                    raise UnstableRun(current, ratio, limit)
            if observer is not None:
                observer(current, snapshot)
            out.append(snapshot)
        if self.logger:
            self.logger.log_debug(f"evolved {len(times)} snapshots from t={tau:g} to t={current:g}")
        return out


def evolve_U(psi0: SpinorField, tau: float, t: float, config: ModelConfig,
             settings: Optional[StepSettings] = None, logger: Optional[BaseLogger] = None) -> SpinorField:
    """U(t, tau) psi0."""
    if t < tau:
        raise ValueError(f"t={t} precedes tau={tau}")
    return SplitStepPropagator(config, psi0.grid, settings, logger).evolve(psi0, tau, [t])[0]
