from .errors import SmallTransmission
from .profiles import (
    ProfileFamily,
    boost,
    inverse_recursion_step,
    recurse_profiles,
    recursion_defect,
    recursion_step,
    threshold_frequencies,
    unboost,
)
from .approximant import (
    ResidualSample,
    coercivity_ratio,
    eval_S,
    evolve_frequency,
    flat_term,
    lab_operator,
    localization_defect,
    residual_field,
    residual_of_S,
    residual_trace,
    track_term,
    transition_defect,
)
