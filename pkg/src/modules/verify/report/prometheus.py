from pathlib import Path
from typing import Union
from prometheus_client import CollectorRegistry, Gauge, write_to_textfile

from ..results import CheckResult, SuiteReport
from .base import ReportSink


class PrometheusReportSink(ReportSink):
    """Sink that exposes measurements as gauges in the Prometheus text format.

    The file is meant for a node-exporter textfile collector, so repeated
    acceptance runs can be tracked over time.
    """

    def __init__(self, output_file: Union[str, Path], job_name: str = "ctm"):
        self.output_file = Path(output_file)
        self.job_name = job_name
        self.registry = CollectorRegistry()

        labels = ['job', 'check', 'seed']
        self.measured = Gauge(
            'ctm_check_measured',
            'Measured value of an acceptance check',
            labels,
            registry=self.registry
        )
        self.threshold = Gauge(
            'ctm_check_threshold',
            'Acceptance threshold of a check',
            labels,
            registry=self.registry
        )
        self.passed = Gauge(
            'ctm_check_passed',
            '1 when the check passed or was skipped, 0 otherwise',
            labels,
            registry=self.registry
        )
        self.suite_failures = Gauge(
            'ctm_suite_failures',
            'Number of failing checks in the suite',
            ['job'],
            registry=self.registry
        )

    def record_check(self, result: CheckResult) -> None:
        labels = dict(job=self.job_name, check=result.check_id, seed=str(result.seed))
        self.measured.labels(**labels).set(result.measured)
        self.threshold.labels(**labels).set(result.threshold)
        self.passed.labels(**labels).set(0.0 if result.failed else 1.0)

    def record_suite(self, report: SuiteReport) -> None:
        self.suite_failures.labels(job=self.job_name).set(len(report.failures))

    def finalize(self) -> None:
        self.output_file.parent.mkdir(parents=True, exist_ok=True)
        write_to_textfile(str(self.output_file), self.registry)
