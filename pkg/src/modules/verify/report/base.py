from abc import ABC, abstractmethod
from enum import Enum

from ..results import CheckResult, SuiteReport


class ReportSinkType(str, Enum):
    JSON = "json"
    CONSOLE = "console"
    PROMETHEUS = "prometheus"


class ReportSink(ABC):
    """Base class for acceptance report sinks."""

    @abstractmethod
    def record_check(self, result: CheckResult) -> None:
        """Record the outcome of a single check."""
        pass

    @abstractmethod
    def record_suite(self, report: SuiteReport) -> None:
        """Record the aggregate outcome of a suite run."""
        pass

    @abstractmethod
    def finalize(self) -> None:
        """Flush whatever was recorded."""
        pass
