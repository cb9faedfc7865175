from typing import Literal
from ..core.fields import SpinorField
from ..core.galilei import galilei_apply
from ..core.tracks import SolitonTrack
from ..dft.frequency import FrequencyPair
from ..dft.transforms import forward_Fhat, forward_Ghat
from ..freeflow.approximant import evolve_frequency
from ..jost.data import ScatteringData


def single_potential_flow(u: FrequencyPair, data: ScatteringData, t: float,
                          which: Literal["G", "F"] = "G") -> SpinorField:
    """Distorted-wave solution G-hat(e^{-it(k^2 + omega) sigma3} u) of the flow around one potential at rest."""
    evolved = evolve_frequency(u, t, data.omega)
    if which == "F":
        return forward_Fhat(evolved, data)
    return forward_Ghat(evolved, data)


def moving_potential_flow(u: FrequencyPair, track: SolitonTrack, data: ScatteringData, t: float,
                          which: Literal["G", "F"] = "G") -> SpinorField:
    """single_potential_flow carried to the lab frame of a moving potential."""
    return galilei_apply(track, single_potential_flow(u, data, t, which), t)
