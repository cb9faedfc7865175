from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import numpy as np
from scipy.linalg import eig, svd

from ..core.fields import SpinorField
from ..core.grid import Grid1D
from ..core.tracks import SolitonTrack
from ..logging.base import BaseLogger
from .errors import AxisViolation, EmbeddedEigenvalue, JordanChainTooLong
from .operator import EigenWindow, Stencil, discretize_operator, eigen_window


@dataclass(frozen=True)
class EigenSettings:
    half_width: Optional[float] = None
    max_nodes: int = 1024
    stencil: Stencil = Stencil.FOURIER
    tol_gap: float = 1e-3
    tol_axis: float = 1e-6
    axis_escalation: float = 1e-3
    zero_tol: float = 1e-3
    agmon_factor: float = 0.1
    jordan_tol: float = 1e-6


@dataclass(frozen=True)
class Eigenpair:
    value: complex
    vector: SpinorField
    decay_rate: float
    parity: int = 0
    flagged: bool = False


@dataclass(frozen=True)
class JordanChain:
    """H z0 = 0 and H z1 = i z0."""
    z0: SpinorField
    z1: SpinorField
    residual: float
    parity: int = 0


@dataclass(frozen=True)
class DiscreteSpectrum:
    track: SolitonTrack
    eigenpairs: Tuple[Eigenpair, ...] = ()
    jordan_chains: Tuple[JordanChain, ...] = ()
    zero_multiplicity: int = 0
    flagged: Tuple[complex, ...] = field(default_factory=tuple)

    @property
    def omega(self) -> float:
        return self.track.omega

    @property
    def jordan_zero(self) -> Optional[JordanChain]:
        return self.jordan_chains[0] if self.jordan_chains else None

    @property
    def is_empty(self) -> bool:
        return not self.eigenpairs and not self.jordan_chains

    def basis(self) -> List[SpinorField]:
        """Eigenvectors followed by each Jordan pair (z0, z1)."""
        vectors = [pair.vector for pair in self.eigenpairs]
        for chain in self.jordan_chains:
            vectors.extend([chain.z0, chain.z1])
        return vectors

    def values(self) -> List[complex]:
        values = [pair.value for pair in self.eigenpairs]
        for _ in self.jordan_chains:
            values.extend([0.0, 0.0])
        return values


def band_distance(value: complex, omega: float) -> float:
    """Distance from value to the essential bands (-inf, -omega] and [omega, inf)."""
    re, im = abs(value.real), abs(value.imag)
    if re >= omega:
        return im
    return float(np.hypot(omega - re, im))


def agmon_rate(window: EigenWindow, vector: np.ndarray) -> float:
    """Fitted a in |v(x)| <= C e^{-a |x|}; 0 for extended vectors, inf when the tail is below resolution."""
    n = window.n
    amplitude = np.hypot(np.abs(vector[:n]), np.abs(vector[n:]))
    peak = amplitude.max()
    if peak == 0.0:
        return 0.0
    distance = np.abs(window.x)
    edge = distance >= 0.9 * distance.max()
    if amplitude[edge].max() > 1e-2 * peak:
        return 0.0
    tail = (amplitude < 1e-2 * peak) & (amplitude > 1e-12 * peak)
    if tail.sum() < 4:
        return np.inf
    slope, _ = np.polyfit(distance[tail], np.log(amplitude[tail]), 1)
    return float(-slope)


def _null_space(matrix: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis of {c : |matrix c| <= tol |c|} with an absolute threshold."""
    columns = matrix.shape[1]
    if matrix.shape[0] == 0:
        return np.eye(columns, dtype=np.complex128)
    _, singular, right_h = svd(matrix, full_matrices=True)
    rank = int(np.sum(singular > tol))
    return right_h[rank:].conj().T


def _reflect(window: EigenWindow, vectors: np.ndarray) -> np.ndarray:
    n = window.n
    index = window.reflection()
    return np.concatenate([vectors[:n][index], vectors[n:][index]], axis=0)


def _parity_split(window: EigenWindow, subspace: np.ndarray) -> List[Tuple[np.ndarray, int]]:
    """Rotate an orthonormal, reflection-invariant basis into even and odd vectors."""
    if subspace.shape[1] == 0:
        return []
    restricted = subspace.conj().T @ _reflect(window, subspace)
    restricted = 0.5 * (restricted + restricted.conj().T)
    parities, rotation = np.linalg.eigh(restricted)
    vectors = subspace @ rotation
    return [(vectors[:, j], int(np.sign(np.round(parities[j])))) for j in range(vectors.shape[1])]


def _to_field(window: EigenWindow, vector: np.ndarray, scale: Optional[complex] = None) -> Tuple[SpinorField, complex]:
    """Interpolate onto the full grid; normalise to unit L2 and real peak unless a scale is given."""
    n = window.n
    values = window.to_grid(np.stack([vector[:n], vector[n:]], axis=-1))
    if scale is None:
        norm = np.sqrt(window.grid.h * np.sum(np.abs(values) ** 2))
        peak = values.flat[np.argmax(np.abs(values))]
        scale = np.conj(peak) / (abs(peak) * norm)
    return SpinorField(window.grid, values * scale), scale


def _snap(value: complex, settings: EigenSettings) -> Tuple[complex, bool]:
    re, im = value.real, value.imag
    size = max(1.0, abs(value))
    if abs(im) <= settings.tol_axis * size:
        return complex(re, 0.0), False
    if abs(re) <= settings.tol_axis * size:
        return complex(0.0, im), False
    if min(abs(re), abs(im)) <= settings.axis_escalation * size:
        if abs(im) < abs(re):
            return complex(re, 0.0), True
        return complex(0.0, im), True
    raise AxisViolation(f"eigenvalue {value:.6g} lies off both axes")


def discrete_eigens(track: SolitonTrack, grid: Grid1D, settings: Optional[EigenSettings] = None,
                    logger: Optional[BaseLogger] = None) -> DiscreteSpectrum:
    """Discrete spectrum of the potential at rest from a dense non-symmetric eigensolve."""
    settings = settings or EigenSettings()
    rest = track.at_rest()
    if rest.profile.is_zero:
        return DiscreteSpectrum(track=rest)

    window = eigen_window(grid, settings.half_width, settings.max_nodes)
    matrix = discretize_operator(rest, window, settings.stencil)
    if logger:
        logger.log_stage("spectrum", f"omega={rest.omega:g} nodes={window.n} stencil={Stencil(settings.stencil).value}")
    values, vectors = eig(matrix)
    omega = rest.omega
    threshold = settings.agmon_factor * np.sqrt(2.0 * omega)

    zero_cluster = np.abs(values) < settings.zero_tol
    eigenpairs: List[Eigenpair] = []
    flagged: List[complex] = []
    for value, vector in zip(values[~zero_cluster], vectors[:, ~zero_cluster].T):
        rate = agmon_rate(window, vector)
        if rate < threshold:
            continue
        if band_distance(value, omega) <= settings.tol_gap:
            if abs(abs(value.real) - omega) > settings.tol_gap:
                raise EmbeddedEigenvalue(f"localized eigenvector at {value:.6g} inside the essential spectrum")
            continue
        snapped, escalated = _snap(complex(value), settings)
        if escalated:
            flagged.append(complex(value))
            if logger:
                logger.log_warning(f"eigenvalue {value:.6g} snapped to {snapped:.6g}")
        parity = 0
        reflected = _reflect(window, vector[:, None])[:, 0]
        if np.allclose(reflected, vector, atol=1e-6 * np.abs(vector).max()):
            parity = 1
        elif np.allclose(reflected, -vector, atol=1e-6 * np.abs(vector).max()):
            parity = -1
        field_values, _ = _to_field(window, vector)
        eigenpairs.append(Eigenpair(snapped, field_values, rate, parity, escalated))

    chains: List[JordanChain] = []
    left, singular, right_h = svd(matrix)
    small = singular < settings.zero_tol
    kernel = right_h[small].conj().T
    if kernel.shape[1]:
        cokernel = left[:, small]
        inverse = right_h[~small].conj().T @ np.diag(1.0 / singular[~small]) @ left[:, ~small].conj().T
        chainable = _null_space(cokernel.conj().T @ kernel, settings.jordan_tol)
        kernel_only = _null_space(chainable.conj().T, 0.5)
        for combination, parity in _parity_split(window, kernel @ kernel_only):
            field_values, _ = _to_field(window, combination)
            eigenpairs.append(Eigenpair(complex(0.0), field_values, agmon_rate(window, combination), parity))
        for z0, parity in _parity_split(window, kernel @ chainable):
            z1 = inverse @ (1j * z0)
            residual = np.linalg.norm(matrix @ z1 - 1j * z0) / np.linalg.norm(z0)
            if np.linalg.norm(cokernel.conj().T @ (1j * z1)) <= settings.jordan_tol * np.linalg.norm(z1):
                raise JordanChainTooLong("generalized kernel has a chain of length three or more")
            z0_field, scale = _to_field(window, z0)
            z1_field, _ = _to_field(window, z1, scale)
            chains.append(JordanChain(z0_field, z1_field, float(residual), parity))

    spectrum = DiscreteSpectrum(
        track=rest,
        eigenpairs=tuple(sorted(eigenpairs, key=lambda p: (p.value.real, p.value.imag))),
        jordan_chains=tuple(chains),
        zero_multiplicity=int(zero_cluster.sum()),
        flagged=tuple(flagged),
    )
    if logger:
        logger.log_table("discrete spectrum", {
            "eigenvalues": ", ".join(f"{p.value:.6g}" for p in spectrum.eigenpairs) or "none",
            "jordan chains": len(chains),
            "zero cluster": spectrum.zero_multiplicity,
        })
    return spectrum
