from ...logging.base import BaseLogger
from ..results import CheckResult, SuiteReport
from .base import ReportSink


class ConsoleReportSink(ReportSink):
    """Sink that writes every record through the CLI logger."""

    def __init__(self, logger: BaseLogger, verbose: bool = False):
        self.logger = logger
        self.verbose = verbose

    def record_check(self, result: CheckResult) -> None:
        if result.error:
            self.logger.log_error(f"{result.check_id} (seed {result.seed}): {result.error}")
            return
        if result.skipped:
            self.logger.log_info(f"{result.check_id} (seed {result.seed}) skipped")
            return
        self.logger.log_check(result.check_id, result.measured, result.threshold, result.passed)
        if self.verbose:
            self.logger.log_table(result.anchor, result.detail)

    def record_suite(self, report: SuiteReport) -> None:
        rows = {**report.counts(), "duration_s": f"{report.duration_ms / 1000.0:.1f}"}
        self.logger.log_table("acceptance suite", rows)

    def finalize(self) -> None:
        """No-op for the console sink."""
        pass
