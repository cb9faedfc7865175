from ..core.errors import CtmError


class UnstableRun(CtmError):
    """The L2 norm grew past the allowed factor during a run."""
    check_id = "evolve.unstable"

    def __init__(self, t: float, ratio: float, limit: float):
        self.t = t
        self.ratio = ratio
        super().__init__(f"L2 norm grew by a factor {ratio:.3f} at t={t:g} (limit {1.0 + limit:.2f})")


class CFLViolation(CtmError):
    check_id = "evolve.cfl"

    def __init__(self, dt: float, bound: float):
        self.dt = dt
        self.bound = bound
        super().__init__(f"time step {dt:g} exceeds the stability bound {bound:.3e}")


class NoDecay(CtmError):
    """The weighted remainder keeps growing; an unstable mode was not projected out."""
    check_id = "evolve.no_decay"

    def __init__(self, growth: float):
        self.growth = growth
        super().__init__(f"weighted remainder grew by a factor {growth:.2f} over the run")
