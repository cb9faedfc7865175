from dataclasses import dataclass
from enum import Enum
from typing import Dict
import numpy as np

from ..jost.data import ScatteringData
from .errors import InconclusiveFit


class Threshold(str, Enum):
    GENERIC = "generic"
    NONGENERIC = "nongeneric"


@dataclass(frozen=True)
class ThresholdReport:
    """Small-k behaviour of |s(k)| = c0 + c1 k + c2 k^2 and the resulting edge classification."""
    classification: Threshold
    c0: float
    c1: float
    c2: float
    relative_residual: float
    samples: int

    @property
    def edges(self) -> Dict[str, Threshold]:
        # sigma1 H sigma1 = -H, so both edges share the classification
        return {"+omega": self.classification, "-omega": self.classification}

    @property
    def generic(self) -> bool:
        return self.classification is Threshold.GENERIC


def resonance_check(data: ScatteringData, k_high: float = 0.3, s0_tol: float = 0.1,
                    max_residual: float = 0.2) -> ThresholdReport:
    """Classify the thresholds +-omega from the vanishing order of |s(k)| at k = 0."""
    k = data.k_samples
    band = (k >= data.k_floor) & (k <= k_high)
    if band.sum() < 3:
        raise InconclusiveFit(
            f"only {int(band.sum())} samples in [{data.k_floor:g}, {k_high:g}]; enlarge the box"
        )
    kb = k[band]
    magnitude = np.abs(data.s[band])
    design = np.stack([np.ones_like(kb), kb, kb ** 2], axis=-1)
    (c0, c1, c2), *_ = np.linalg.lstsq(design, magnitude, rcond=None)
    fitted = design @ np.array([c0, c1, c2])
    relative = float(np.linalg.norm(fitted - magnitude) / np.linalg.norm(magnitude))
    if relative > max_residual:
        raise InconclusiveFit(f"small-k fit residual {relative:.1%} exceeds {max_residual:.0%}")
    classification = Threshold.NONGENERIC if c0 > s0_tol else Threshold.GENERIC
    return ThresholdReport(classification, float(c0), float(c1), float(c2), relative, int(band.sum()))
