import json
from pathlib import Path
from typing import Any, Dict, Union

from ..results import CheckResult, SuiteReport
from .base import ReportSink


class JsonReportSink(ReportSink):
    """Sink that saves one record per check plus the suite summary to a JSON file."""

    def __init__(self, output_file: Union[str, Path]):
        self.output_file = Path(output_file)
        self.report: Dict[str, Any] = {
            'checks': [],
            'suite': None,
        }

    def record_check(self, result: CheckResult) -> None:
        self.report['checks'].append(result.as_dict())

    def record_suite(self, report: SuiteReport) -> None:
        summary = report.as_dict()
        summary.pop('checks')
        self.report['suite'] = summary

    def finalize(self) -> None:
        self.output_file.parent.mkdir(parents=True, exist_ok=True)
        with open(self.output_file, 'w') as f:
            json.dump(self.report, f, indent=2, sort_keys=True)
