from .errors import CFLViolation, NoDecay, UnstableRun
from .propagator import (
    SplitStepPropagator,
    StepSettings,
    cfl_bound,
    evolve_U,
    potential_exponential,
    sponge_profile,
)
from .flows import moving_potential_flow, single_potential_flow
from .trajectory import EvolutionState, Trajectory
from .remainder import RemainderRun, driven_remainder
from .discrete import (
    DiscreteRun,
    boosted_mode,
    discrete_solution,
    mode_solutions,
    rest_mode,
    spectrum_modes,
)
from .scattering import ScatteringRun, build_T, exponential_rate
