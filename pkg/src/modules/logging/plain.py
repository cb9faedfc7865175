import sys
from typing import Any, Dict
from .base import BaseLogger


class PlainLogger(BaseLogger):
    """Plain text on stderr for CI logs and files."""
    
    def __init__(self, log_level: str = "INFO"):
        super().__init__(log_level)
        self.logger.configure(
            handlers=[{
                "sink": sys.stderr,
                "format": "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {message}",
                "colorize": False,
                "level": log_level
            }]
        )
    
    def log_stage(self, stage: str, detail: str):
        self.logger.info(f"[{stage}] {detail}")

    def log_check(self, check_id: str, measured: float, threshold: float, passed: bool):
        self.logger.info(f"{self.verdict(passed)} {check_id} measured={measured:.3e} threshold={threshold:.3e}")

    def log_table(self, title: str, rows: Dict[str, Any]):
        self.logger.info(f"{title}:")
        for key, value in rows.items():
            self.logger.info(f"  {key}: {self.format_value(value)}")

    def log_error(self, message: str):
        self.logger.error(message)

    def log_warning(self, message: str):
        self.logger.warning(message)

    def log_info(self, message: str):
        self.logger.info(message)

    def log_debug(self, message: str):
        self.logger.debug(message)
