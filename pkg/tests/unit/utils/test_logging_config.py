"""Tests for logging configuration."""

import logging

import pytest

from utils import logging_config
from utils.logging_config import RecordBufferHandler, clear_logs, get_logs, setup_logging


def _record(message, level=logging.INFO):
    return logging.LogRecord(
        name="test_logger",
        level=level,
        pathname="test.py",
        lineno=1,
        msg=message,
        args=(),
        exc_info=None
    )


def test_buffer_handler_emit():
    """Test that records are stored with their level and logger."""
    handler = RecordBufferHandler()
    handler.emit(_record("Test log message"))
    assert len(handler.entries) == 1
    entry = handler.entries[0]
    assert entry["level"] == "INFO"
    assert entry["logger"] == "test_logger"
    assert entry["message"] == "Test log message"
    assert "timestamp" in entry


def test_buffer_handler_max_entries():
    """Test that only the most recent records are kept."""
    handler = RecordBufferHandler(max_entries=3)
    for index in range(5):
        handler.emit(_record(f"message {index}"))
    assert [entry["message"] for entry in handler.entries] == ["message 2", "message 3", "message 4"]


@pytest.mark.parametrize("verbosity,level", [
    (0, logging.WARNING),
    (1, logging.INFO),
    (2, logging.DEBUG),
    (5, logging.DEBUG),
])
def test_setup_logging_levels(verbosity, level):
    """Test the verbosity to level mapping."""
    setup_logging(verbosity)
    root = logging.getLogger()
    assert root.level == level
    assert any(isinstance(handler, RecordBufferHandler) for handler in root.handlers)


def test_setup_logging_uses_config_level(mock_config_file):
    """Test the configured default level."""
    mock_config_file.write_text("logging:\n  level: ERROR\n", encoding="utf-8")
    setup_logging()
    assert logging.getLogger().level == logging.ERROR


def test_get_logs_filters_by_level():
    """Test get_logs and clear_logs."""
    setup_logging(1)
    logger = logging.getLogger("c1p.test")
    logger.info("progress")
    logger.warning("route skipped")
    assert [entry["message"] for entry in get_logs()] == ["progress", "route skipped"]
    warnings = get_logs(logging.WARNING)
    assert [entry["message"] for entry in warnings] == ["route skipped"]
    assert "levelno" not in warnings[0]
    clear_logs()
    assert get_logs() == []


def test_get_logs_before_setup(monkeypatch):
    """Test that no buffer means no logs."""
    monkeypatch.setattr(logging_config, "_buffer_handler", None)
    assert get_logs() == []
    clear_logs()
