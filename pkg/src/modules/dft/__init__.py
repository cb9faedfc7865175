from .frequency import FrequencyPair, gaussian_packet
from .flat import flat_F0, flat_F0_adjoint, shift_frequency, frequency_phase
from .transforms import (
    forward_Ghat,
    forward_Fhat,
    adjoint_Fstar,
    adjoint_Gstar,
    inverse_Ghat,
    inverse_Fhat,
    distorted_basis,
    projection_Pe,
)
from .inversion import InversionResidual, inversion_residual, low_k_mass, reflection_relation, distributional_pairing

__all__ = [
    'FrequencyPair', 'gaussian_packet',
    'flat_F0', 'flat_F0_adjoint', 'shift_frequency', 'frequency_phase',
    'forward_Ghat', 'forward_Fhat', 'adjoint_Fstar', 'adjoint_Gstar', 'inverse_Ghat', 'inverse_Fhat',
    'distorted_basis', 'projection_Pe',
    'InversionResidual', 'inversion_residual', 'low_k_mass', 'reflection_relation', 'distributional_pairing',
]
