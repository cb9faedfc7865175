from typing import Any, Dict, List
from src.modules.logging.base import BaseLogger


class _TestLogger(BaseLogger):
    """Test logger that captures all logs."""
    def __init__(self):
        self.logs: List[str] = []

    def log_stage(self, stage: str, detail: str) -> None:
        self.logs.append(f"STAGE {stage}: {detail}")

    def log_check(self, check_id: str, measured: float, threshold: float, passed: bool) -> None:
        self.logs.append(f"CHECK {check_id}: {measured:.3e} / {threshold:.3e} {'PASS' if passed else 'FAIL'}")

    def log_table(self, title: str, rows: Dict[str, Any]) -> None:
        self.logs.append(f"TABLE {title}: {rows}")

    def log_info(self, message: str) -> None:
        self.logs.append(f"INFO: {message}")

    def log_error(self, message: str) -> None:
        self.logs.append(f"ERROR: {message}")

    def log_warning(self, message: str) -> None:
        self.logs.append(f"WARNING: {message}")

    def log_debug(self, message: str) -> None:
        self.logs.append(f"DEBUG: {message}")

    def get_logs(self) -> List[str]:
        """Get all captured logs."""
        return self.logs


def create_test_logger() -> BaseLogger:
    """Create a test logger instance."""
    return _TestLogger()
