from ..core.errors import CtmError


class NotContracting(CtmError):
    """The Neumann iteration stopped contracting; the velocity gaps are too small."""
    check_id = "decompose.neumann"

    def __init__(self, rho: float, iteration: int):
        self.rho = rho
        self.iteration = iteration
        super().__init__(f"contraction factor {rho:.3f} stayed above the limit up to iteration {iteration}")


class DecompositionFailed(CtmError):
    check_id = "decompose.residual"

    def __init__(self, residual: float, tol: float):
        self.residual = residual
        super().__init__(f"reconstruction residual {residual:.3e} exceeds {tol:.1e} relative")
