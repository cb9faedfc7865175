from dataclasses import dataclass, field
from typing import Dict, List
import numpy as np

from .fields import SpinorField
from .tracks import ModelConfig
from .windows import track_windows


def inner(f: SpinorField, g: SpinorField) -> complex:
    """<f, g> = h * sum(f1 conj(g1) + f2 conj(g2))."""
    return complex(f.grid.h * np.sum(f.values * np.conj(g.values)))


def sigma3_pairing(f: SpinorField, g: SpinorField) -> complex:
    """<f, sigma3 g> = h * sum(f1 conj(g1) - f2 conj(g2))."""
    if f.grid != g.grid:
        raise ValueError("fields live on different grids")
    products = f.values * np.conj(g.values)
    return complex(f.grid.h * np.sum(products[:, 0] - products[:, 1]))


def l2_norm(f: SpinorField) -> float:
    return float(np.sqrt(f.grid.h * np.sum(np.abs(f.values) ** 2)))


def linf_norm(f: SpinorField) -> float:
    return float(np.max(np.linalg.norm(f.values, axis=1)))


def sobolev_norm(f: SpinorField, s: float = 1.0) -> float:
    """H^s norm through the discrete Fourier transform (Parseval on the grid)."""
    spectrum = np.fft.fft(f.values, axis=0)
    weight = (1.0 + f.grid.k_fft ** 2) ** s
    return float(np.sqrt(f.grid.h * np.sum(weight[:, None] * np.abs(spectrum) ** 2) / f.grid.n_x))


def h1_norm(f: SpinorField) -> float:
    return sobolev_norm(f, 1.0)


def spectral_derivative(f: SpinorField, order: int = 1) -> SpinorField:
    multiplier = (1j * f.grid.k_fft) ** order
    return f.with_values(np.fft.ifft(np.fft.fft(f.values, axis=0) * multiplier[:, None], axis=0))


@dataclass
class NormRecord:
    """Norms of one field at one time."""
    l2: float
    linf: float
    h1: float
    weighted: List[Dict[int, float]] = field(default_factory=list)

    def as_row(self) -> Dict[str, float]:
        row = {"L2": self.l2, "Linf": self.linf, "H1": self.h1}
        for j in (0, 1, 2):
            row[f"weighted_j{j}"] = max((w[j] for w in self.weighted), default=0.0)
        return row


def norm_suite(f: SpinorField, config: ModelConfig, tau: float = 0.0, eps: float = 1.0) -> NormRecord:
    """L2, Linf, H1 and the per-track weighted norms ||<x - y_l - v_l tau>^j chi_l f|| for j = 0, 1, 2."""
    x = f.grid.x
    amplitude = np.linalg.norm(f.values, axis=1)
    weighted = []
    for track, chi in zip(config.tracks, track_windows(config, f.grid, tau, eps)):
        bracket = np.sqrt(1.0 + (x - track.center(tau)) ** 2)
        weighted.append({
            j: float(np.sqrt(f.grid.h * np.sum((bracket ** j * chi * amplitude) ** 2)))
            for j in (0, 1, 2)
        })
    return NormRecord(l2=l2_norm(f), linf=linf_norm(f), h1=h1_norm(f), weighted=weighted)
