from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Tuple
import numpy as np

from ..core.grid import Grid1D, KLattice
from ..core.tracks import ModelConfig, SolitonTrack
from ..decompose.decomposition import DecompositionSettings
from ..evolve.propagator import StepSettings
from ..jost.builder import build_scattering_data
from ..jost.cache.base import TableStore
from ..jost.data import ScatteringData
from ..jost.solver import JostSettings
from ..logging.base import BaseLogger
from ..spectrum.discrete import DiscreteSpectrum, EigenSettings, discrete_eigens
from ..spectrum.errors import InconclusiveFit
from ..spectrum.resonance import ThresholdReport, resonance_check


@dataclass
class SuiteContext:
    """Everything the acceptance checks share: the model, its tables and the numerical settings."""
    config: ModelConfig
    grid: Grid1D
    lattice: KLattice
    data: Tuple[ScatteringData, ...]
    spectra: Tuple[DiscreteSpectrum, ...]
    thresholds: Tuple[Optional[ThresholdReport], ...]
    step: StepSettings = field(default_factory=StepSettings)
    decomposition: DecompositionSettings = field(default_factory=DecompositionSettings)
    jost: JostSettings = field(default_factory=JostSettings)
    bank_size: int = 10
    threads: Optional[int] = None
    logger: Optional[BaseLogger] = None

    @classmethod
    def build(cls, config: ModelConfig, grid: Grid1D, lattice: KLattice,
              jost: Optional[JostSettings] = None, eigen: Optional[EigenSettings] = None,
              store: Optional[TableStore] = None, threads: Optional[int] = None,
              logger: Optional[BaseLogger] = None, **settings) -> "SuiteContext":
        """Build the scattering table, discrete spectrum and threshold class of every track."""
        jost = jost or JostSettings()
        data, spectra, thresholds = [], [], []
        for track in config.tracks:
            table = build_scattering_data(track, grid, lattice, jost, logger, store, threads or 1)
            data.append(table)
            spectra.append(discrete_eigens(track, grid, eigen, logger))
            thresholds.append(classify_threshold(table, logger))
        return cls(config=config, grid=grid, lattice=lattice, data=tuple(data), spectra=tuple(spectra),
                   thresholds=tuple(thresholds), jost=jost, threads=threads, logger=logger, **settings)

    def rng(self, seed: int, salt: int = 0) -> np.random.Generator:
        return np.random.default_rng([int(seed), int(salt)])

    @property
    def generic(self) -> bool:
        """True when every track's thresholds were classified generic."""
        return all(report is not None and report.generic for report in self.thresholds)

    @property
    def has_modes(self) -> bool:
        return any(not spectrum.is_empty for spectrum in self.spectra)

    def needs_notch(self, index: int) -> bool:
        """Track index reflects and its threshold is generic or could not be classified."""
        if self.config.tracks[index].profile.is_zero:
            return False
        report = self.thresholds[index]
        return report is None or report.generic

    def with_tracks(self, tracks: Sequence[SolitonTrack]) -> ModelConfig:
        """Same model with moved tracks; separation thresholds are dropped for these auxiliary configurations."""
        return replace(self.config, tracks=tuple(tracks), l_sep=0.0, c_sep=0.0)


def classify_threshold(data: ScatteringData, logger: Optional[BaseLogger] = None) -> Optional[ThresholdReport]:
    try:
        return resonance_check(data)
    except InconclusiveFit as e:
        if logger:
            logger.log_warning(f"threshold classification inconclusive: {e}")
        return None
