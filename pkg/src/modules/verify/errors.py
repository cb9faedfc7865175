from ..core.errors import CtmError


class InsufficientSamples(CtmError):
    check_id = "verify.samples"

    def __init__(self, found: int, needed: int):
        self.found = found
        super().__init__(f"decay fit needs at least {needed} samples in its window, found {found}")
