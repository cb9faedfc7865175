import sys
from typing import Any, Dict
from .base import BaseLogger


class JsonLogger(BaseLogger):
    """One serialized loguru record per event, for log shippers.

    Structured fields travel in ``record.extra``; the message stays empty
    for stage, check and table events.
    """

    def __init__(self, log_level: str = "INFO"):
        super().__init__(log_level)
        self.logger.configure(
            handlers=[{
                "sink": sys.stderr,
                "serialize": True,
                "format": "{time} | {level} | {message}",
                "level": log_level
            }]
        )

    def _emit(self, level: str, event: str, message: str = "", **fields: Any):
        self.logger.bind(event=event, **fields).log(level, message)

    def log_stage(self, stage: str, detail: str):
        self._emit("INFO", "stage", stage=stage, detail=detail)

    def log_check(self, check_id: str, measured: float, threshold: float, passed: bool):
        self._emit("INFO", "check", check_id=check_id, measured=float(measured), threshold=float(threshold),
                   passed=bool(passed), verdict=self.verdict(passed))

    def log_table(self, title: str, rows: Dict[str, Any]):
        self._emit("INFO", "table", title=title,
                   rows={key: self.format_value(value) for key, value in rows.items()})

    def log_error(self, message: str):
        self._emit("ERROR", "error", message=message)

    def log_warning(self, message: str):
        self._emit("WARNING", "warning", message=message)

    def log_info(self, message: str):
        self._emit("INFO", "info", message=message)

    def log_debug(self, message: str):
        self._emit("DEBUG", "debug", message=message)
