from ..core.errors import CtmError


class SmallTransmission(CtmError):
    """The recursion would divide by a transmission coefficient below s_min."""
    check_id = "freeflow.transmission"

    def __init__(self, track_index: int, minimum: float, s_min: float):
        self.track_index = track_index
        self.minimum = minimum
        super().__init__(
            f"track {track_index}: |s| drops to {minimum:.3e} (< {s_min:g}) where the profile is not negligible"
        )
