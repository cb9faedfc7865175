from dataclasses import dataclass
from typing import Dict, Optional
import numpy as np

from .data import ScatteringData


@dataclass(frozen=True)
class UnitarityReport:
    """Worst deviations of the coefficient identities over every lattice sample."""
    unitarity: float
    s_symmetry: float
    r_symmetry: float
    cross: float
    residual: float

    def as_dict(self) -> Dict[str, float]:
        return {
            "unitarity": self.unitarity,
            "s_symmetry": self.s_symmetry,
            "r_symmetry": self.r_symmetry,
            "cross": self.cross,
            "residual": self.residual,
        }


def unitarity_report(data: ScatteringData) -> UnitarityReport:
    s, r = data.s, data.r
    s_reflected = data.lattice.reflect(s)
    r_reflected = data.lattice.reflect(r)
    return UnitarityReport(
        unitarity=float(np.max(np.abs(np.abs(s) ** 2 + np.abs(r) ** 2 - 1.0))),
        s_symmetry=float(np.max(np.abs(s_reflected - np.conj(s)))),
        r_symmetry=float(np.max(np.abs(r_reflected - np.conj(r)))),
        cross=float(np.max(np.abs(s * np.conj(r) + r * np.conj(s)))),
        residual=float(np.max(data.residuals)),
    )


def verify_connection(data: ScatteringData, k: float) -> float:
    """Relative defect of F(x,k) = G(x,-k)/conj(s) - (conj(r)/conj(s)) G(x,k) at the nearest sample."""
    index = data.index_of(k)
    mirror = data.lattice.n - 1 - index
    s_bar = np.conj(data.s[index])
    r_bar = np.conj(data.r[index])
    F = data.jost_F[index]
    predicted = data.jost_G[mirror] / s_bar - (r_bar / s_bar) * data.jost_G[index]
    scale = np.linalg.norm(F)
    return float(np.linalg.norm(F - predicted) / scale) if scale else 0.0


@dataclass(frozen=True)
class LargeKFit:
    """Constants C in |s - 1| <= C/(1+|k|) and |r| <= C/(1+|k|) over a high-frequency band."""
    s_constant: float
    r_constant: float
    k_low: float
    k_high: float


def large_k_fit(data: ScatteringData, k_low: float = 8.0, k_high: float = 32.0) -> LargeKFit:
    """Fit the large-|k| decay constants; the band shrinks to [k_max/4, k_max] on short lattices."""
    k = np.abs(data.k_samples)
    if k.max() < k_high:
        k_low, k_high = k.max() / 4.0, k.max()
    band = (k >= k_low) & (k <= k_high)
    weight = 1.0 + k[band]
    return LargeKFit(
        s_constant=float(np.max(np.abs(data.s[band] - 1.0) * weight)),
        r_constant=float(np.max(np.abs(data.r[band]) * weight)),
        k_low=float(k_low),
        k_high=float(k_high),
    )


def derivative_decay(data: ScatteringData, order: int, k_low: Optional[float] = None) -> float:
    """Fitted power p in |d^m r/dk^m| ~ |k|^p on k > 0 by finite differences; reported, never asserted."""
    k = data.k_samples
    positive = k > 0
    derivative = data.r[positive]
    for _ in range(order):
        derivative = np.gradient(derivative, data.lattice.delta_k)
    kp = k[positive]
    band = kp >= (k_low if k_low is not None else kp.max() / 4.0)
    magnitude = np.abs(derivative[band])
    usable = magnitude > 0
    if usable.sum() < 3:
        return float("nan")
    slope, _ = np.polyfit(np.log(kp[band][usable]), np.log(magnitude[usable]), 1)
    return float(slope)
