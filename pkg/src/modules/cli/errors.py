from typing import Optional

from ..core.errors import CtmError


class ConfigError(CtmError):
    """Raised when a run configuration cannot be parsed or violates its constraints."""
    check_id = "cli.config"


class FieldFileError(CtmError):
    """Raised when a field file is malformed, corrupted or lives on another grid."""
    check_id = "cli.field_file"


class UpstreamError(CtmError):
    """Wraps a pipeline error with the stage that produced it.

    The original check id is kept so that the exit message names the
    check that actually failed.
    """

    def __init__(self, stage: str, cause: CtmError, source: Optional[str] = None):
        self.stage = stage
        self.cause = cause
        self.source = source
        self.check_id = cause.check_id
        where = f" ({source})" if source else ""
        super().__init__(f"{stage}{where}: {cause}")
