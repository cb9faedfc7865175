from ..core.errors import CtmError


class SingularSystem(CtmError):
    """The Nystrom matrix is numerically singular (an embedded eigenvalue is likely)."""
    check_id = "jost.singular"

    def __init__(self, k: float, condition: float):
        self.k = k
        self.condition = condition
        super().__init__(f"Nystrom system singular at k={k:.6g} (condition number {condition:.3e})")


class ResidualTooLarge(CtmError):
    check_id = "jost.residual"

    def __init__(self, k: float, residual: float, tolerance: float):
        self.k = k
        self.residual = residual
        super().__init__(
            f"eigen-equation residual {residual:.3e} at k={k:.6g} exceeds tolerance {tolerance:.1e}"
        )


class FitIllConditioned(CtmError):
    check_id = "jost.fit"

    def __init__(self, k: float, condition: float):
        self.k = k
        self.condition = condition
        super().__init__(f"plane-wave fit at k={k:.6g} is ill-conditioned (condition number {condition:.3e})")
