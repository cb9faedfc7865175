class CtmError(Exception):
    """Base class for every error raised by the ctm pipeline.

    ``check_id`` names the acceptance check or stage that failed; the CLI
    reports it next to the nonzero exit code.
    """
    check_id: str = "ctm"


class GridError(CtmError):
    """Raised when a grid violates its sizing constraints."""
    check_id = "core.grid"


class SeparationError(CtmError):
    """Raised when soliton tracks are not ordered or not separated enough."""
    check_id = "core.separation"


class ProfileError(CtmError):
    """Raised when a potential profile is not even or does not decay."""
    check_id = "core.profile"
