from .errors import EmbeddedEigenvalue, AxisViolation, JordanChainTooLong, GramSingular, InconclusiveFit
from .operator import Stencil, EigenWindow, eigen_window, discretize_operator, fourier_resample
from .discrete import (
    EigenSettings,
    Eigenpair,
    JordanChain,
    DiscreteSpectrum,
    discrete_eigens,
    agmon_rate,
    band_distance,
)
from .resonance import Threshold, ThresholdReport, resonance_check
from .projections import sigma3_gram, discrete_coefficients, projection_Pd, projection_Pe

__all__ = [
    'EmbeddedEigenvalue', 'AxisViolation', 'JordanChainTooLong', 'GramSingular', 'InconclusiveFit',
    'Stencil', 'EigenWindow', 'eigen_window', 'discretize_operator', 'fourier_resample',
    'EigenSettings', 'Eigenpair', 'JordanChain', 'DiscreteSpectrum', 'discrete_eigens',
    'agmon_rate', 'band_distance',
    'Threshold', 'ThresholdReport', 'resonance_check',
    'sigma3_gram', 'discrete_coefficients', 'projection_Pd', 'projection_Pe',
]
