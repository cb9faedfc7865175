from enum import Enum
from typing import Dict, Type

from .base import BaseLogger
from .colorful import ColorfulLogger
from .plain import PlainLogger
from .json import JsonLogger


class OutputFormat(str, Enum):
    COLORFUL = "colorful"
    PLAIN = "plain"
    JSON = "json"


_LOGGERS: Dict[OutputFormat, Type[BaseLogger]] = {
    OutputFormat.COLORFUL: ColorfulLogger,
    OutputFormat.PLAIN: PlainLogger,
    OutputFormat.JSON: JsonLogger,
}

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def create_logger(output_type: str, log_level: str = "INFO") -> BaseLogger:
    """Logger for a ctm run: colorful on a terminal, plain for CI logs, json for log shippers.

    Raises:
        ValueError: If the format or the level is unknown
    """
    try:
        output = OutputFormat(output_type.lower())
    except ValueError:
        raise ValueError(
            f"Invalid output type: {output_type}. Must be one of: {', '.join(f.value for f in OutputFormat)}"
        )
    level = log_level.upper()
    if level not in LOG_LEVELS:
        raise ValueError(f"Invalid log level: {log_level}. Must be one of: {', '.join(LOG_LEVELS)}")
    return _LOGGERS[output](level)


__all__ = ['BaseLogger', 'ColorfulLogger', 'PlainLogger', 'JsonLogger', 'OutputFormat', 'LOG_LEVELS', 'create_logger']
