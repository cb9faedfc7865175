from ..core.errors import CtmError


class EmbeddedEigenvalue(CtmError):
    """A localized eigenvector was found inside an essential band."""
    check_id = "spectrum.embedded"


class AxisViolation(CtmError):
    """An eigenvalue sits away from both the real and the imaginary axis."""
    check_id = "spectrum.axis"


class JordanChainTooLong(CtmError):
    check_id = "spectrum.jordan"


class GramSingular(CtmError):
    check_id = "spectrum.gram"

    def __init__(self, condition: float):
        self.condition = condition
        super().__init__(f"sigma3 Gram matrix of the discrete basis is singular (condition number {condition:.3e})")


class InconclusiveFit(CtmError):
    check_id = "spectrum.resonance"
