import numpy as np
import pytest

from src.modules.logging import BaseLogger, ColorfulLogger, JsonLogger, PlainLogger, create_logger


@pytest.mark.parametrize("output, cls", [
    ("colorful", ColorfulLogger),
    ("PLAIN", PlainLogger),
    ("json", JsonLogger),
])
def test_format_selects_logger(output, cls):
    logger = create_logger(output, "warning")
    assert isinstance(logger, cls)
    assert logger.log_level == "WARNING"


def test_unknown_format():
    with pytest.raises(ValueError, match="Invalid output type"):
        create_logger("xml")


def test_unknown_level():
    with pytest.raises(ValueError, match="Invalid log level"):
        create_logger("plain", "LOUD")


@pytest.mark.parametrize("value, expected", [
    (3, "3"),
    (2.0, "2"),
    (1.23456789e-7, "1.23457e-07"),
    (np.float64(0.5), "0.5"),
    (True, "True"),
    ("none", "none"),
])
def test_table_values_are_compact(value, expected):
    assert BaseLogger.format_value(value) == expected


def test_verdict():
    assert BaseLogger.verdict(True) == "PASS"
    assert BaseLogger.verdict(False) == "FAIL"
