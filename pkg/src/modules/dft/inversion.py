from dataclasses import dataclass
from typing import Dict, Optional
import numpy as np

from ..core.fields import SpinorField
from ..core.norms import l2_norm
from ..jost.data import ScatteringData
from .frequency import FrequencyPair
from .transforms import (
    adjoint_Gstar,
    forward_Fhat,
    forward_Ghat,
    inverse_Fhat,
    inverse_Ghat,
    projection_Pe,
)


# share of profile mass near k = 0 above which a residual is reported as threshold sensitive
LOW_K_FLAG = 1e-2


@dataclass(frozen=True)
class InversionResidual:
    """Inversion defects of one profile, with the share of its mass at |k| < low_k.

    Near a generic threshold s(k) vanishes like k and the kernels F/s are
    extrapolated there, so a profile carrying mass at low |k| is inverted
    less accurately than the bulk of the lattice.
    """
    frequency_G: float
    frequency_F: float
    physical: Optional[float] = None
    low_k_mass: float = 0.0

    @property
    def threshold_sensitive(self) -> bool:
        return self.low_k_mass > LOW_K_FLAG

    def as_dict(self) -> Dict[str, float]:
        out = {"frequency_G": self.frequency_G, "frequency_F": self.frequency_F, "low_k_mass": self.low_k_mass}
        if self.physical is not None:
            out["physical"] = self.physical
        return out


def low_k_mass(u: FrequencyPair, low_k: float) -> float:
    """Fraction of the l2 mass of u carried by samples with |k| < low_k."""
    weights = np.abs(u.values) ** 2
    total = float(weights.sum())
    if total == 0.0:
        return 0.0
    return float(weights[np.abs(u.k) < low_k].sum()) / total


def inversion_residual(u: FrequencyPair, f: Optional[SpinorField], data: ScatteringData,
                       pe: Optional[SpinorField] = None, low_k: float = 0.25) -> InversionResidual:
    """Relative defects of both frequency-side inversions and, given f, of the physical-side one.

    ``pe`` may carry a precomputed P_e f.
    """
    scale = u.norm()
    g_defect = (inverse_Ghat(forward_Ghat(u, data), data) - u).norm() / scale
    f_defect = (inverse_Fhat(forward_Fhat(u, data), data) - u).norm() / scale
    physical = None
    if f is not None:
        projected = pe if pe is not None else projection_Pe(f, data)
        synthesised = forward_Fhat(adjoint_Gstar(f.sigma3(), data).sigma3(), data)
        physical = l2_norm(synthesised - projected) / l2_norm(f)
    return InversionResidual(frequency_G=float(g_defect), frequency_F=float(f_defect), physical=physical,
                             low_k_mass=low_k_mass(u, low_k))


def reflection_relation(u: FrequencyPair, data: ScatteringData) -> float:
    """Relative defect of F-hat(u) = G-hat(u/s - (r/s) u(-k))."""
    s = data.s[:, None]
    r = data.r[:, None]
    mapped = u.with_values(u.values / s - (r / s) * u.reflect().values)
    lhs = forward_Fhat(u, data)
    return l2_norm(lhs - forward_Ghat(mapped, data)) / max(l2_norm(lhs), 1e-300)


def distributional_pairing(data: ScatteringData, g: np.ndarray) -> np.ndarray:
    """(1/2 pi) sum_l dl <F(., k), sigma3 G(., l)> g(l), which should reproduce s(k) g(k)."""
    h = data.grid.h
    F = data.jost_F
    G = np.conj(data.jost_G)
    G[..., 1] *= -1.0
    pairing = h * np.einsum("kxi,lxi->kl", F, G)
    return data.lattice.delta_k / (2.0 * np.pi) * pairing @ g
