from .signal import Side, HalfLineSignal
from .projections import (
    dual_coefficients,
    from_dual_coefficients,
    hardy_project,
    project_plus,
    project_minus,
    project,
)
from .leakage import leakage_estimate, leakage_sweep, unit_multiplier

__all__ = [
    'Side', 'HalfLineSignal', 'dual_coefficients', 'from_dual_coefficients', 'hardy_project',
    'project_plus', 'project_minus', 'project', 'leakage_estimate', 'leakage_sweep', 'unit_multiplier',
]
