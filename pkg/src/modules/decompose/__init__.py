from .errors import DecompositionFailed, NotContracting
from .discrete import WindowProjection, boosted_basis, cross_track_coupling, window_project_discrete
from .bmaps import (
    LEFT,
    RIGHT,
    BMaps,
    assemble_B_maps,
    from_half_line,
    half_line,
    smooth_split,
    window_pieces,
)
from .neumann import HardySystemState, NeumannResult, initial_state, loop_gain, neumann_solve, sweep
from .decomposition import (
    Decomposition,
    DecompositionSettings,
    PcMethod,
    apply_Pc,
    full_decompose,
    h1_coercivity,
)
