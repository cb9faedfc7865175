from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple
import numpy as np

from .errors import InsufficientSamples


class FitModel(str, Enum):
    POWER = "power"
    EXP = "exp"


@dataclass(frozen=True)
class DecayFit:
    """Least-squares fit of log(values) against log(t) (power) or t (exp).

    ``exponent`` is p in values ~ A t^p; ``rate`` is beta in values ~ A e^{-beta t}.
    """
    model: FitModel
    times: np.ndarray
    values: np.ndarray
    window: Tuple[float, float]
    slope: float
    intercept: float
    r_squared: float

    @property
    def exponent(self) -> float:
        return self.slope

    @property
    def rate(self) -> float:
        return -self.slope

    @property
    def prefactor(self) -> float:
        return float(np.exp(self.intercept))

    def as_dict(self) -> dict:
        key = "exponent" if self.model is FitModel.POWER else "rate"
        return {
            key: self.exponent if self.model is FitModel.POWER else self.rate,
            "r_squared": self.r_squared,
            "t_min": self.window[0],
            "t_max": self.window[1],
            "samples": int(len(self.times)),
        }


def decay_fit(times: Sequence[float], values: Sequence[float], model: FitModel = FitModel.POWER,
              t_burn: float = 5.0, window: Optional[Tuple[float, float]] = None,
              min_samples: int = 6) -> DecayFit:
    """Fit a decay law to a positive series, ignoring samples before t_burn or outside ``window``."""
    model = FitModel(model)
    times = np.asarray(times, dtype=float)
    values = np.abs(np.asarray(values, dtype=float))
    low, high = window if window is not None else (t_burn, float(np.max(times, initial=t_burn)))
    keep = (times >= low) & (times <= high) & (values > 0.0)
    if keep.sum() < min_samples:
        raise InsufficientSamples(int(keep.sum()), min_samples)
    t, v = times[keep], values[keep]
    abscissa = np.log(t) if model is FitModel.POWER else t
    ordinate = np.log(v)
    slope, intercept = np.polyfit(abscissa, ordinate, 1)
    predicted = slope * abscissa + intercept
    total = float(np.sum((ordinate - ordinate.mean()) ** 2))
    r_squared = 1.0 - float(np.sum((ordinate - predicted) ** 2)) / total if total > 0.0 else 1.0
    return DecayFit(
        model=model, times=t, values=v, window=(float(low), float(high)),
        slope=float(slope), intercept=float(intercept), r_squared=r_squared,
    )
