"""Logging configuration for the application."""

import logging
import sys
from datetime import datetime
from typing import List, Optional

from core.config_manager import ConfigManager

DEFAULT_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"
DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class RecordBufferHandler(logging.Handler):
    """Keeps the most recent log records in memory for machine-readable reports."""

    def __init__(self, max_entries: int = 1000) -> None:
        super().__init__()
        self.max_entries = max_entries
        self.entries: List[dict] = []

    def emit(self, record: logging.LogRecord) -> None:
        try:
            self.entries.append({
                "timestamp": datetime.fromtimestamp(record.created).strftime(DEFAULT_DATE_FORMAT),
                "level": record.levelname,
                "levelno": record.levelno,
                "logger": record.name,
                "message": self.format(record),
            })
            if len(self.entries) > self.max_entries:
                self.entries = self.entries[-self.max_entries:]
        except Exception as e:
            # Logging failures must not break the command being logged
            sys.stderr.write(f"Error in RecordBufferHandler: {e}\n")


_buffer_handler: Optional[RecordBufferHandler] = None


def _resolve_level(verbosity: int) -> int:
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    level_name = str(ConfigManager.get_logging_config().get("level", "WARNING"))
    return getattr(logging, level_name.upper(), logging.WARNING)


def setup_logging(verbosity: int = 0) -> None:
    """Configure the root logger.

    Records go to stderr so that stdout carries command output only.
    ``verbosity`` 1 and 2 force INFO and DEBUG respectively.
    """
    global _buffer_handler
    logging_config = ConfigManager.get_logging_config()
    level = _resolve_level(verbosity)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(
        logging_config.get("format", DEFAULT_FORMAT),
        logging_config.get("date_format", DEFAULT_DATE_FORMAT),
    ))

    _buffer_handler = RecordBufferHandler(int(logging_config.get("max_log_entries", 1000)))
    _buffer_handler.setFormatter(logging.Formatter("%(message)s"))

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
    root_logger.addHandler(console_handler)
    root_logger.addHandler(_buffer_handler)


def get_logs(min_level: int = logging.NOTSET) -> List[dict]:
    """Retrieve buffered log entries at or above ``min_level``."""
    if _buffer_handler is None:
        return []
    return [
        {key: value for key, value in entry.items() if key != "levelno"}
        for entry in _buffer_handler.entries
        if entry["levelno"] >= min_level
    ]


def clear_logs() -> None:
    if _buffer_handler is not None:
        _buffer_handler.entries = []
