from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional, Tuple
import numpy as np


def _plain(value: Any) -> Any:
    """Convert numpy scalars and containers to JSON-friendly builtins."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": float(np.real(value)), "im": float(np.imag(value))}
    if isinstance(value, datetime):
        return value.isoformat()
    return value


@dataclass
class CheckResult:
    """One acceptance measurement: what was measured, against which bound, and the verdict."""
    check_id: str
    anchor: str
    measured: float
    threshold: float
    passed: bool
    seed: int = 0
    detail: Dict[str, Any] = field(default_factory=dict)
    skipped: bool = False
    error: Optional[str] = None
    duration_ms: float = 0.0

    @property
    def failed(self) -> bool:
        return not self.skipped and not self.passed

    def as_dict(self, timing: bool = False) -> Dict[str, Any]:
        """Plain record; wall-clock fields only with ``timing`` so that files stay reproducible."""
        record = {
            "id": self.check_id,
            "anchor": self.anchor,
            "measured": self.measured,
            "threshold": self.threshold,
            "pass": self.passed,
            "seed": self.seed,
            "skipped": self.skipped,
            "error": self.error,
            "detail": self.detail,
        }
        if timing:
            record["duration_ms"] = self.duration_ms
        return _plain(record)


@dataclass
class SuiteReport:
    results: List[CheckResult]
    seeds: Tuple[int, ...]
    start_time: datetime
    end_time: datetime
    duration_ms: float
    model: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if result.failed]

    @property
    def first_failure(self) -> Optional[CheckResult]:
        failures = self.failures
        return failures[0] if failures else None

    def counts(self) -> Dict[str, int]:
        return {
            "total": len(self.results),
            "passed": sum(1 for r in self.results if r.passed and not r.skipped),
            "failed": len(self.failures),
            "skipped": sum(1 for r in self.results if r.skipped),
        }

    def as_dict(self, timing: bool = False) -> Dict[str, Any]:
        record = {
            "passed": self.passed,
            "seeds": list(self.seeds),
            "counts": self.counts(),
            "model": self.model,
            "checks": [result.as_dict(timing) for result in self.results],
        }
        if timing:
            record.update(start_time=self.start_time, end_time=self.end_time, duration_ms=self.duration_ms)
        return _plain(record)
