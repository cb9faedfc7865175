from pathlib import Path
from typing import Dict, Iterable, Optional, Union

from ...logging.base import BaseLogger
from ..results import SuiteReport
from .base import ReportSink, ReportSinkType
from .console import ConsoleReportSink
from .json import JsonReportSink
from .prometheus import PrometheusReportSink

_FILE_NAMES: Dict[ReportSinkType, str] = {
    ReportSinkType.JSON: "report.json",
    ReportSinkType.PROMETHEUS: "report.prom",
}


def create_report_sink(sink: ReportSinkType, output_dir: Optional[Union[str, Path]] = None,
                       logger: Optional[BaseLogger] = None, job_name: str = "ctm") -> ReportSink:
    """Create a report sink of the requested type.

    Raises:
        ValueError: If the sink type is not supported or lacks what it needs
    """
    sink = ReportSinkType(sink)
    if sink == ReportSinkType.CONSOLE:
        if logger is None:
            raise ValueError("a logger is required for the console sink")
        return ConsoleReportSink(logger)
    if output_dir is None:
        raise ValueError(f"an output directory is required for the {sink.value} sink")
    target = Path(output_dir) / _FILE_NAMES[sink]
    if sink == ReportSinkType.JSON:
        return JsonReportSink(target)
    if sink == ReportSinkType.PROMETHEUS:
        return PrometheusReportSink(target, job_name)
    raise ValueError(f"Unsupported report sink type: {sink}")


def publish(report: SuiteReport, sinks: Iterable[ReportSink]) -> None:
    """Feed a finished suite report to every sink and flush them."""
    for sink in sinks:
        for result in report.results:
            sink.record_check(result)
        sink.record_suite(report)
        sink.finalize()
