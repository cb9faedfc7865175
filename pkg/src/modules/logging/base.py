from abc import ABC, abstractmethod
from numbers import Real
from typing import Any, Dict
from loguru import logger


class BaseLogger(ABC):
    """Run logger shared by the pipeline stages and the acceptance suite.

    Besides the usual levels a logger renders three structured events:
    the start of a stage, one measured check against its threshold and a
    small key/value table.
    """

    def __init__(self, log_level: str = "INFO"):
        self.logger = logger
        self.log_level = log_level

    @staticmethod
    def verdict(passed: bool) -> str:
        return "PASS" if passed else "FAIL"

    @staticmethod
    def format_value(value: Any) -> str:
        """Numbers in compact scientific form; everything else through str()."""
        if isinstance(value, bool) or not isinstance(value, Real):
            return str(value)
        if float(value).is_integer() and abs(value) < 1e6:
            return str(int(value))
        return f"{float(value):.6g}"

    @abstractmethod
    def log_stage(self, stage: str, detail: str):
        pass

    @abstractmethod
    def log_check(self, check_id: str, measured: float, threshold: float, passed: bool):
        pass

    @abstractmethod
    def log_table(self, title: str, rows: Dict[str, Any]):
        pass

    @abstractmethod
    def log_error(self, message: str):
        pass

    @abstractmethod
    def log_warning(self, message: str):
        pass

    @abstractmethod
    def log_info(self, message: str):
        pass

    @abstractmethod
    def log_debug(self, message: str):
        pass
