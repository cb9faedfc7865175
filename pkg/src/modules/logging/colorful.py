import click
from typing import Any, Dict
from .base import BaseLogger
import sys


class ColorfulLogger(BaseLogger):
    """Styled terminal output; checks are green or red by verdict."""
    
    def __init__(self, log_level: str = "INFO"):
        super().__init__(log_level)
        self.logger.configure(
            handlers=[{
                "sink": sys.stderr,
                "colorize": True,
                "format": "<cyan>{time:YYYY-MM-DD HH:mm:ss.SSS}</cyan> | "
                         "<level>{level: <8}</level> | "
                         "<white>{message}</white>",
                "level": log_level
            }]
        )
    
    def log_stage(self, stage: str, detail: str):
        self.logger.info(click.style(f"[{stage}]", fg="cyan", bold=True) + " " + click.style(detail, fg="white"))

    def log_check(self, check_id: str, measured: float, threshold: float, passed: bool):
        color = "green" if passed else "red"
        verdict = self.verdict(passed)
        self.logger.info(
            click.style(f"{verdict:<4} {check_id}", fg=color, bold=True)
            + click.style(f"  measured={measured:.3e}  threshold={threshold:.3e}", fg="white")
        )

    def log_table(self, title: str, rows: Dict[str, Any]):
        self.logger.info(click.style(f"{title}:", fg="blue", bold=True))
        for key, value in rows.items():
            self.logger.info(click.style(f"  {key}: {self.format_value(value)}", fg="white"))

    def log_error(self, message: str):
        self.logger.error(click.style(message, fg="red", bold=True))

    def log_warning(self, message: str):
        self.logger.warning(click.style(message, fg="yellow", bold=True))

    def log_info(self, message: str):
        self.logger.info(click.style(message, fg="white"))

    def log_debug(self, message: str):
        self.logger.debug(click.style(message, fg="blue"))
