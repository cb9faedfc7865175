from .base import ReportSink, ReportSinkType
from .console import ConsoleReportSink
from .json import JsonReportSink
from .prometheus import PrometheusReportSink
from .factory import create_report_sink, publish

__all__ = [
    'ReportSink', 'ReportSinkType', 'ConsoleReportSink', 'JsonReportSink', 'PrometheusReportSink',
    'create_report_sink', 'publish',
]
