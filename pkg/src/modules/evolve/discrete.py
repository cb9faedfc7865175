from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Union
import numpy as np

from ..core.fields import SpinorField
from ..core.galilei import galilei_apply, galilei_unwind
from ..core.norms import l2_norm
from ..core.tracks import ModelConfig, SolitonTrack
from ..logging.base import BaseLogger
from ..spectrum.discrete import DiscreteSpectrum, Eigenpair, JordanChain
from ..spectrum.projections import discrete_coefficients
from .propagator import SplitStepPropagator, StepSettings

Mode = Union[Eigenpair, JordanChain]


def spectrum_modes(spectrum: DiscreteSpectrum) -> List[Mode]:
    return [*spectrum.eigenpairs, *spectrum.jordan_chains]


def rest_mode(mode: Mode, t: float) -> SpinorField:
    """Exact solution of the flow around the potential at rest: e^{-i lambda t} h, or z1 + t z0."""
    if isinstance(mode, JordanChain):
        return mode.z1 + mode.z0 * t
    return mode.vector * np.exp(-1j * mode.value * t)


def boosted_mode(track: SolitonTrack, mode: Mode, t: float) -> SpinorField:
    return galilei_apply(track, rest_mode(mode, t), t)


def mode_solutions(config: ModelConfig, spectra: Sequence[DiscreteSpectrum]) -> List[Callable[[float], SpinorField]]:
    """Every moving discrete mode of every track as a function of time; Jordan chains give two."""
    out = []
    for track, spectrum in zip(config.tracks, spectra):
        for pair in spectrum.eigenpairs:
            out.append(lambda t, tr=track, m=pair: boosted_mode(tr, m, t))
        for chain in spectrum.jordan_chains:
            out.append(lambda t, tr=track, c=chain: galilei_apply(tr, c.z0, t))
            out.append(lambda t, tr=track, c=chain: boosted_mode(tr, c, t))
    return out


@dataclass
class DiscreteRun:
    track_index: int
    mode: Mode
    times: List[float]
    remainders: List[float]
    relative: List[float]
    slope: Optional[float] = None
    coefficients: List[complex] = field(default_factory=list)

    @property
    def max_relative(self) -> float:
        return max(self.relative, default=0.0)


def discrete_solution(config: ModelConfig, spectra: Sequence[DiscreteSpectrum], track_index: int, mode_index: int,
                      times: Sequence[float], settings: Optional[StepSettings] = None,
                      logger: Optional[BaseLogger] = None) -> DiscreteRun:
    """Evolve a Galilei-boosted discrete mode with the full flow and compare with the boosted prediction."""
    track = config.tracks[track_index]
    modes = spectrum_modes(spectra[track_index])
    if not 0 <= mode_index < len(modes):
        raise IndexError(f"track {track_index} has {len(modes)} discrete modes, asked for {mode_index}")
    mode = modes[mode_index]
    settings = settings or StepSettings()
    unchecked = StepSettings(dt=settings.dt, k_max=settings.k_max, sponge=settings.sponge,
                             sponge_fraction=settings.sponge_fraction,
                             sponge_strength=settings.sponge_strength, growth_limit=None)
    psi0 = boosted_mode(track, mode, 0.0)
    times = [float(t) for t in times]
    fields = SplitStepPropagator(config, psi0.grid, unchecked, logger).evolve(psi0, 0.0, times)
    remainders, relative = [], []
    for t, psi in zip(times, fields):
        predicted = boosted_mode(track, mode, t)
        gap = l2_norm(psi - predicted)
        remainders.append(gap)
        relative.append(gap / max(l2_norm(predicted), 1e-300))
    run = DiscreteRun(track_index=track_index, mode=mode, times=times, remainders=remainders, relative=relative)
    if isinstance(mode, JordanChain):
        basis = [mode.z0, mode.z1]
        run.coefficients = [
            complex(discrete_coefficients(galilei_unwind(track, psi, t), basis)[0]) for t, psi in zip(times, fields)
        ]
        if len(times) >= 2:
            run.slope = float(np.polyfit(times, np.real(run.coefficients), 1)[0])
    if logger:
        logger.log_info(f"track {track_index} mode {mode_index}: max relative remainder {run.max_relative:.3e}")
    return run
