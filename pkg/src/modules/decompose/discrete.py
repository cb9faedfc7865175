from dataclasses import dataclass
from typing import List, Sequence
import numpy as np

from ..core.fields import SpinorField
from ..core.galilei import galilei_apply
from ..core.norms import l2_norm, sigma3_pairing
from ..core.tracks import ModelConfig
from ..spectrum.discrete import DiscreteSpectrum
from ..spectrum.projections import discrete_coefficients


def boosted_basis(config: ModelConfig, spectra: Sequence[DiscreteSpectrum], t: float = 0.0) -> List[List[SpinorField]]:
    """Per track, the discrete basis carried to the lab frame at time t."""
    return [
        [galilei_apply(track, vector, t) for vector in spectrum.basis()]
        for track, spectrum in zip(config.tracks, spectra)
    ]


@dataclass(frozen=True)
class WindowProjection:
    coefficients: List[np.ndarray]
    basis: List[List[SpinorField]]
    cross_coupling: float

    def parts(self) -> List[SpinorField]:
        """Discrete component of each track, sum_d c_d g(h_d)."""
        out = []
        for coefficients, vectors in zip(self.coefficients, self.basis):
            if not vectors:
                out.append(None)
                continue
            values = sum(c * v.values for c, v in zip(coefficients, vectors))
            out.append(vectors[0].with_values(values))
        return out

    def total(self, like: SpinorField) -> SpinorField:
        total = SpinorField.zeros(like.grid)
        for part in self.parts():
            if part is not None:
                total = total + part
        return total


def cross_track_coupling(basis: List[List[SpinorField]]) -> float:
    """Largest sigma3 pairing between L2-normalized modes of different tracks."""
    worst = 0.0
    for i, left in enumerate(basis):
        for j, right in enumerate(basis):
            if i == j:
                continue
            for a in left:
                for b in right:
                    scale = (l2_norm(a) * l2_norm(b)) or 1.0
                    worst = max(worst, abs(sigma3_pairing(a, b)) / scale)
    return worst


def window_project_discrete(f: SpinorField, config: ModelConfig, spectra: Sequence[DiscreteSpectrum],
                            t: float = 0.0, max_condition: float = 1e10) -> WindowProjection:
    """Per-track sigma3 Gram solve against the boosted discrete basis; cross-track terms are dropped and measured."""
    basis = boosted_basis(config, spectra, t)
    coefficients = [discrete_coefficients(f, vectors, max_condition) for vectors in basis]
    return WindowProjection(coefficients=coefficients, basis=basis, cross_coupling=cross_track_coupling(basis))
