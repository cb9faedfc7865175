from .errors import CtmError, GridError, SeparationError, ProfileError
from .grid import Grid1D, KLattice
from .fields import SpinorField
from .profiles import PotentialProfile, ProfileKind
from .tracks import (
    SolitonTrack,
    ModelConfig,
    moving_potential_eval,
    total_potential,
    stationary_potential,
    apply_potential,
)
from .galilei import galilei_apply, galilei_unwind, free_evolve, spectral_shift
from .windows import ramp, track_windows
from .norms import (
    NormRecord,
    inner,
    sigma3_pairing,
    l2_norm,
    linf_norm,
    h1_norm,
    sobolev_norm,
    spectral_derivative,
    norm_suite,
)

__all__ = [
    'CtmError', 'GridError', 'SeparationError', 'ProfileError',
    'Grid1D', 'KLattice', 'SpinorField', 'PotentialProfile', 'ProfileKind',
    'SolitonTrack', 'ModelConfig', 'moving_potential_eval', 'total_potential',
    'stationary_potential', 'apply_potential',
    'galilei_apply', 'galilei_unwind', 'free_evolve', 'spectral_shift',
    'ramp', 'track_windows',
    'NormRecord', 'inner', 'sigma3_pairing', 'l2_norm', 'linf_norm', 'h1_norm',
    'sobolev_norm', 'spectral_derivative', 'norm_suite',
]
