from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence
import numpy as np

from ..core.fields import SpinorField
from ..core.grid import Grid1D
from ..core.norms import h1_norm, sigma3_pairing
from ..core.tracks import ModelConfig
from ..logging.base import BaseLogger
from .errors import NoDecay
from .propagator import SplitStepPropagator, StepSettings

Source = Callable[[float], SpinorField]
ModeSolution = Callable[[float], SpinorField]

# the weighted remainder may not grow past this factor over its early maximum
_GROWTH_FACTOR = 10.0


@dataclass
class RemainderRun:
    times: List[float]
    fields: List[SpinorField]
    r0: SpinorField
    beta: float
    beta1: float
    weighted_remainder: float
    weighted_source: float
    pairings: List[complex] = field(default_factory=list)

    @property
    def constant(self) -> float:
        """Measured C in sup e^{beta1 t} ||r||_H1 <= C sup e^{beta t} ||f||_H1."""
        if self.weighted_source == 0.0:
            return 0.0
        return self.weighted_remainder / self.weighted_source


def _duhamel(propagator: SplitStepPropagator, source: Source, r0: SpinorField,
             times: Sequence[float], dt: float) -> List[SpinorField]:
    """r(t) = U(t, 0) r0 - i int_0^t U(t, s) f(s) ds with the trapezoidal rule over split steps."""
    values = np.array(r0.values)
    current = 0.0
    forcing = source(0.0).values
    out = []
    for target in times:
        span = target - current
        n_steps = int(np.ceil(span / dt - 1e-9)) if span > 0 else 0
        for _ in range(n_steps):
            step = span / n_steps
            carried = propagator.step(forcing, current, step)
            values = propagator.step(values, current, step)
            current += step
            forcing = source(current).values
            values = values - 0.5j * step * (carried + forcing)
        current = target
        out.append(r0.with_values(values))
    return out


def driven_remainder(source: Source, config: ModelConfig, grid: Grid1D, times: Sequence[float], beta: float,
                     settings: Optional[StepSettings] = None, modes: Sequence[ModeSolution] = (),
                     beta1: Optional[float] = None, r0: Optional[SpinorField] = None,
                     logger: Optional[BaseLogger] = None) -> RemainderRun:
    """Solve i r_t + sigma3 r_xx - V r = f forward from t = 0.

    With ``modes`` given, r(0) gets a discrete correction chosen so that the
    sigma3 pairings of r with every mode solution vanish at the final time.
    """
    settings = settings or StepSettings()
    propagator = SplitStepPropagator(config, grid, StepSettings(
        dt=settings.dt, k_max=settings.k_max, sponge=settings.sponge,
        sponge_fraction=settings.sponge_fraction, sponge_strength=settings.sponge_strength,
        growth_limit=None,
    ), logger)
    times = [float(t) for t in times]
    beta1 = beta / 2.0 if beta1 is None else beta1
    start = r0 if r0 is not None else SpinorField.zeros(grid)

    fields = _duhamel(propagator, source, start, times, settings.dt)
    pairings: List[complex] = []
    if modes:
        t_final = times[-1]
        finals = [mode(t_final) for mode in modes]
        gram = np.array([[sigma3_pairing(a, b) for b in finals] for a in finals])
        mismatch = np.array([sigma3_pairing(fields[-1], b) for b in finals])
        coefficients = np.linalg.solve(gram.T, -mismatch)
        correction = sum((c * mode(0.0).values for c, mode in zip(coefficients, modes)),
                         np.zeros_like(start.values))
        start = start.with_values(start.values + correction)
        fields = _duhamel(propagator, source, start, times, settings.dt)
        pairings = [sigma3_pairing(fields[-1], b) for b in finals]
        if logger:
            logger.log_debug(f"initial correction with {len(modes)} modes, |c| = {np.abs(coefficients).max():.3e}")

    weights = np.exp(beta1 * np.array(times))
    remainder_series = weights * np.array([h1_norm(f) for f in fields])
    source_series = np.exp(beta * np.array(times)) * np.array([h1_norm(source(t)) for t in times])
    half = max(1, len(times) // 2)
    early = remainder_series[:half].max()
    if early > 0.0 and remainder_series[-1] > _GROWTH_FACTOR * early:
        raise NoDecay(float(remainder_series[-1] / early))
    return RemainderRun(
        times=times,
        fields=fields,
        r0=start,
        beta=beta,
        beta1=beta1,
        weighted_remainder=float(remainder_series.max(initial=0.0)),
        weighted_source=float(source_series.max(initial=0.0)),
        pairings=pairings,
    )
