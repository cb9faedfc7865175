from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence
import numpy as np

from ..core.fields import SpinorField
from ..core.norms import h1_norm, l2_norm
from ..core.tracks import ModelConfig
from ..dft.frequency import FrequencyPair
from ..dft.transforms import inverse_Ghat
from ..core.galilei import galilei_unwind
from ..freeflow.approximant import eval_S
from ..freeflow.profiles import ProfileFamily, recurse_profiles, unboost
from ..jost.data import ScatteringData
from ..logging.base import BaseLogger
from ..spectrum.discrete import DiscreteSpectrum
from .bmaps import assemble_B_maps
from .discrete import WindowProjection, window_project_discrete
from .errors import DecompositionFailed
from .neumann import initial_state, loop_gain, neumann_solve


class PcMethod(str, Enum):
    WINDOW = "window"
    HARDY = "hardy"


@dataclass(frozen=True)
class DecompositionSettings:
    eps: float = 1.0
    tol_neumann: float = 1e-8
    max_iter: int = 200
    rho_max: float = 0.95
    tol_decomp: float = 1e-3
    s_min: float = 1e-3
    threads: Optional[int] = None


@dataclass
class Decomposition:
    """f = S(0) phi + sum over tracks of boosted discrete components, up to ``residual``."""
    family: ProfileFamily
    discrete: WindowProjection
    residual: float
    size: float
    rho: float = 0.0
    iterations: int = 0
    neumann_residual: float = 0.0
    loop_gain: float = 0.0
    intermediate: Dict[str, float] = field(default_factory=dict)

    @property
    def discrete_parts(self) -> List[np.ndarray]:
        return self.discrete.coefficients

    @property
    def stability_constant(self) -> float:
        """max_l (||phi_l|| + ||v_l||) / ||f||."""
        if self.size == 0.0:
            return 0.0
        parts = self.discrete.parts()
        worst = 0.0
        for index, phi in enumerate(self.family.per_ell):
            part = parts[index] if index < len(parts) else None
            worst = max(worst, phi.norm() + (l2_norm(part) if part is not None else 0.0))
        return worst / self.size

    def scattering_part(self) -> SpinorField:
        return eval_S(self.family, 0.0)

    def rows(self) -> List[Dict[str, object]]:
        rows = []
        for index, phi in enumerate(self.family.per_ell):
            coefficients = self.discrete.coefficients[index] if index < len(self.discrete.coefficients) else []
            rows.append({
                "track": index + 1,
                "phi_norm": phi.norm(),
                "discrete": " ".join(f"{c.real:+.6e}{c.imag:+.6e}j" for c in coefficients),
            })
        return rows

    def summary(self) -> Dict[str, float]:
        return {
            "residual": self.residual,
            "contraction": self.rho,
            "iterations": self.iterations,
            "neumann_residual": self.neumann_residual,
            "loop_gain": self.loop_gain,
            "stability_constant": self.stability_constant,
            "cross_coupling": self.discrete.cross_coupling,
            **self.intermediate,
        }


def _seed_single(f: SpinorField, config: ModelConfig, data: ScatteringData) -> FrequencyPair:
    track = config.tracks[0]
    return unboost(inverse_Ghat(galilei_unwind(track, f, 0.0), data), track, data)


def full_decompose(f: SpinorField, config: ModelConfig, data: Sequence[ScatteringData],
                   spectra: Sequence[DiscreteSpectrum], settings: Optional[DecompositionSettings] = None,
                   logger: Optional[BaseLogger] = None) -> Decomposition:
    """B-maps, Neumann solve of the Hardy system, seed recovery and window projection of what is left."""
    settings = settings or DecompositionSettings()
    size = l2_norm(f)
    rho, iterations, neumann_residual = 0.0, 0, 0.0
    intermediate: Dict[str, float] = {}
    if config.m == 1:
        phi = _seed_single(f, config, data[0])
    else:
        rhs = assemble_B_maps(f, config, data, settings.eps, settings.threads)
        intermediate["b_map_norm"] = rhs.norm() / max(size, 1e-300)
        result = neumann_solve(initial_state(config, data, rhs), settings.tol_neumann, settings.max_iter,
                               settings.rho_max, logger=logger)
        phi = result.state.gap_profile(0)
        intermediate["tag_leakage"] = result.leakage
        rho, iterations, neumann_residual = result.rho, result.iterations, result.residual
    family = recurse_profiles(phi, config, data, settings.s_min)
    if config.m > 2:
        # gap profiles solved for directly versus those implied by the recursion
        for index in range(1, config.m - 1):
            solved = result.state.gap_profile(index)
            implied = family.per_ell[index]
            intermediate[f"gap_{index + 1}_mismatch"] = (solved - implied).norm() / max(implied.norm(), 1e-300)
    scattering = eval_S(family, 0.0)
    projection = window_project_discrete(f - scattering, config, spectra)
    reconstruction = scattering + projection.total(f)
    residual = l2_norm(f - reconstruction) / max(size, 1e-300)
    decomposition = Decomposition(
        family=family, discrete=projection, residual=residual, size=size, rho=rho, iterations=iterations,
        neumann_residual=neumann_residual, loop_gain=loop_gain(config, data) if config.m > 1 else 0.0,
        intermediate=intermediate,
    )
    if logger:
        logger.log_table("decomposition", {k: f"{v:.3e}" for k, v in decomposition.summary().items()})
    if residual > settings.tol_decomp:
        raise DecompositionFailed(residual, settings.tol_decomp)
    return decomposition


def apply_Pc(f: SpinorField, config: ModelConfig, spectra: Sequence[DiscreteSpectrum], t: float = 0.0,
             method: PcMethod = PcMethod.WINDOW, data: Sequence[ScatteringData] = (),
             settings: Optional[DecompositionSettings] = None) -> SpinorField:
    """Projection onto the scattering part.

    The window method removes the boosted discrete components at time t;
    the Hardy method re-synthesizes S(0) phi from the full decomposition and
    only applies at t = 0.
    """
    if PcMethod(method) is PcMethod.HARDY:
        if t != 0.0:
            raise ValueError("the Hardy decomposition is only available at t = 0")
        return full_decompose(f, config, data, spectra, settings).scattering_part()
    projection = window_project_discrete(f, config, spectra, t)
    return f - projection.total(f)


def h1_coercivity(family: ProfileFamily) -> float:
    """||S(0) phi||_H1 / max_l ||(1 + |k|) phi_l||."""
    denominator = max(phi.weighted_norm(1.0) for phi in family.per_ell)
    if denominator == 0.0:
        return 0.0
    return h1_norm(eval_S(family, 0.0)) / denominator
