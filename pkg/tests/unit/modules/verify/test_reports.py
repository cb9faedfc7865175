import json
from datetime import datetime
from unittest.mock import Mock

import numpy as np
import pytest

from src.modules.logging.base import BaseLogger
from src.modules.verify.report import (
    ConsoleReportSink,
    JsonReportSink,
    PrometheusReportSink,
    ReportSinkType,
    create_report_sink,
    publish,
)
from src.modules.verify.results import CheckResult, SuiteReport
from src.modules.verify.summary import render_summary


def _result(check_id="scatter.unitarity", passed=True, **kwargs) -> CheckResult:
    return CheckResult(check_id=check_id, anchor="unitarity holds", measured=1e-12, threshold=1e-8,
                       passed=passed, **kwargs)


@pytest.fixture
def report() -> SuiteReport:
    now = datetime(2024, 1, 1)
    return SuiteReport(
        results=[
            _result(detail={"worst_k": np.float64(0.5)}),
            _result("dft.inversion", passed=False),
            _result("hardy.leakage", passed=False, skipped=True),
        ],
        seeds=(0,),
        start_time=now,
        end_time=now,
        duration_ms=12.0,
        model={"tracks": 2, "n_x": 512, "x_min": -20.0, "x_max": 20.0, "n_k": 102, "generic_thresholds": True},
    )


class TestResults:
    def test_record_has_no_timing_by_default(self):
        record = _result(duration_ms=3.0).as_dict()
        assert set(record) == {"id", "anchor", "measured", "threshold", "pass", "seed", "skipped", "error", "detail"}
        assert _result(duration_ms=3.0).as_dict(timing=True)["duration_ms"] == 3.0

    def test_numpy_values_become_builtins(self):
        record = _result(detail={"value": np.float64(2.0), "eig": np.complex128(1 + 2j)}).as_dict()
        assert type(record["detail"]["value"]) is float
        assert record["detail"]["eig"] == {"re": 1.0, "im": 2.0}

    def test_skipped_is_not_a_failure(self):
        assert not _result(passed=False, skipped=True).failed

    def test_suite_counts(self, report):
        assert not report.passed
        assert report.first_failure.check_id == "dft.inversion"
        assert report.counts() == {"total": 3, "passed": 1, "failed": 1, "skipped": 1}

    def test_suite_timing_is_optional(self, report):
        assert "duration_ms" not in report.as_dict()
        assert report.as_dict(timing=True)["start_time"] == "2024-01-01T00:00:00"


class TestSummary:
    def test_lists_every_check(self, report):
        text = render_summary(report)
        assert text.startswith("# ctm acceptance report")
        assert "FAIL: 1 passed, 1 failed, 1 skipped of 3" in text
        for check_id in ("scatter.unitarity", "dft.inversion", "hardy.leakage"):
            assert f"## {check_id}" in text
        assert "- worst_k: 0.5" in text


class TestSinks:
    def test_json_sink(self, report, tmp_path):
        sink = create_report_sink(ReportSinkType.JSON, tmp_path)
        assert isinstance(sink, JsonReportSink)
        publish(report, [sink])
        saved = json.loads((tmp_path / "report.json").read_text())
        assert len(saved["checks"]) == 3
        assert saved["suite"]["counts"]["failed"] == 1
        assert "checks" not in saved["suite"]

    def test_prometheus_sink(self, report, tmp_path):
        sink = create_report_sink("prometheus", tmp_path, job_name="ctm-test")
        assert isinstance(sink, PrometheusReportSink)
        publish(report, [sink])
        text = (tmp_path / "report.prom").read_text()
        assert "ctm_check_measured{" in text
        assert 'job="ctm-test"' in text
        assert 'check="dft.inversion"' in text
        assert "ctm_suite_failures" in text

    def test_console_sink_logs_checks(self, report):
        logger = Mock(spec=BaseLogger)
        sink = create_report_sink(ReportSinkType.CONSOLE, logger=logger)
        assert isinstance(sink, ConsoleReportSink)
        publish(report, [sink])
        assert logger.log_check.call_count == 2
        logger.log_info.assert_called_once()
        logger.log_table.assert_called_once()

    def test_console_sink_needs_logger(self):
        with pytest.raises(ValueError):
            create_report_sink(ReportSinkType.CONSOLE)

    def test_file_sinks_need_directory(self):
        with pytest.raises(ValueError):
            create_report_sink(ReportSinkType.JSON)

    def test_unknown_sink(self, tmp_path):
        with pytest.raises(ValueError):
            create_report_sink("statsd", tmp_path)
