from dataclasses import dataclass
from typing import List, Optional, Sequence
import numpy as np

from ..core.norms import h1_norm, l2_norm
from ..freeflow.approximant import eval_S, residual_field
from ..freeflow.profiles import ProfileFamily
from ..logging.base import BaseLogger
from ..spectrum.discrete import DiscreteSpectrum
from .discrete import mode_solutions
from .propagator import SplitStepPropagator, StepSettings
from .remainder import driven_remainder
from .trajectory import Trajectory


@dataclass
class ScatteringRun:
    """Solution T(t) phi started from S(0) phi + r(0) and its deviation from S(t) phi."""
    trajectory: Trajectory
    deviations: List[float]
    initial_size: float
    correction: float
    rate: float

    @property
    def relative_deviations(self) -> List[float]:
        return [d / max(self.initial_size, 1e-300) for d in self.deviations]


def exponential_rate(times: Sequence[float], values: Sequence[float]) -> float:
    """beta in values ~ A e^{-beta t} by least squares on the logarithm; 0 with fewer than two positive samples."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    keep = values > 0.0
    if keep.sum() < 2:
        return 0.0
    slope, _ = np.polyfit(times[keep], np.log(values[keep]), 1)
    return float(-slope)


def build_T(family: ProfileFamily, times: Sequence[float], settings: Optional[StepSettings] = None,
            spectra: Sequence[DiscreteSpectrum] = (), beta: float = 1.0,
            logger: Optional[BaseLogger] = None) -> ScatteringRun:
    """Evolve the scattering solution attached to a profile family and measure ||psi(t) - S(t) phi||_H1.

    When discrete spectra are supplied the initial datum is corrected by one
    driven-remainder pass so that psi is asymptotically sigma3-orthogonal to
    every moving discrete mode.
    """
    config = family.config
    settings = settings or StepSettings()
    times = [float(t) for t in times]
    s0 = eval_S(family, 0.0)
    grid = s0.grid
    psi0 = s0
    modes = mode_solutions(config, spectra)
    if modes:
        correction = driven_remainder(
            lambda t: -residual_field(family, t), config, grid, times, beta,
            settings=settings, modes=modes, logger=logger,
        )
        psi0 = s0 + correction.r0
    if logger:
        logger.log_stage("build_T", f"{len(times)} record times, {len(modes)} discrete modes")
    fields = SplitStepPropagator(config, grid, settings, logger).evolve(psi0, 0.0, times)
    trajectory = Trajectory.from_fields(config, times, fields)
    deviations = [h1_norm(f - eval_S(family, t)) for t, f in zip(times, fields)]
    return ScatteringRun(
        trajectory=trajectory,
        deviations=deviations,
        initial_size=h1_norm(s0),
        correction=l2_norm(psi0 - s0),
        rate=exponential_rate(times, deviations),
    )
