from typing import Dict, List, Sequence

from ..core.norms import sigma3_pairing
from ..core.tracks import ModelConfig
from ..evolve.discrete import mode_solutions
from ..evolve.trajectory import Trajectory
from ..spectrum.discrete import DiscreteSpectrum


def orthogonality_trace(trajectory: Trajectory, spectra: Sequence[DiscreteSpectrum],
                        config: ModelConfig) -> Dict[str, List[complex]]:
    """For every moving discrete mode h, the series t -> <psi(t), sigma3 g(h)(t)>.

    The series are also attached to the trajectory so that its CSV dump
    carries one pairing column per mode.
    """
    series: Dict[str, List[complex]] = {}
    for index, mode in enumerate(mode_solutions(config, spectra)):
        series[f"mode_{index}"] = [
            sigma3_pairing(state.field, mode(state.t)) for state in trajectory.states
        ]
    trajectory.pairings.update(series)
    return series


def scattering_accepted(series: Sequence[complex], ratio: float = 0.1, floor: float = 1e-6) -> bool:
    """|series(t_final)| <= ratio |series(0)|, or both ends below floor."""
    first, last = abs(series[0]), abs(series[-1])
    if first < floor and last < floor:
        return True
    return last <= ratio * first


def trace_ratios(series: Dict[str, List[complex]]) -> Dict[str, float]:
    """|series(t_final)| / |series(0)| per mode; 0 when both vanish."""
    out = {}
    for name, values in series.items():
        first, last = abs(values[0]), abs(values[-1])
        if first > 0.0:
            out[name] = float(last / first)
        else:
            out[name] = 0.0 if last == 0.0 else float("inf")
    return out
