from .errors import SingularSystem, ResidualTooLarge, FitIllConditioned
from .solver import JostSettings, JostSolver, JostColumns
from .coefficients import extract_coefficients, plane_wave_fit, matching_radius, station_indices
from .data import ScatteringData, table_hash
from .builder import build_scattering_data, solve_jost
from .identities import (
    UnitarityReport,
    unitarity_report,
    verify_connection,
    LargeKFit,
    large_k_fit,
    derivative_decay,
)

__all__ = [
    'SingularSystem', 'ResidualTooLarge', 'FitIllConditioned',
    'JostSettings', 'JostSolver', 'JostColumns',
    'extract_coefficients', 'plane_wave_fit', 'matching_radius', 'station_indices',
    'ScatteringData', 'table_hash', 'build_scattering_data', 'solve_jost',
    'UnitarityReport', 'unitarity_report', 'verify_connection', 'LargeKFit', 'large_k_fit',
    'derivative_decay',
]
