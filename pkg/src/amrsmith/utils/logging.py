"""Structured logging for amrsmith commands.

Every handler writes to stderr (or a file) because stdout carries command
results: scores, triples, token lines. The stderr handler goes through
`tqdm.write` so log lines do not tear the corpus progress bars.
"""

import json
import logging
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from tqdm import tqdm

# Context keys shared by all modules
CONTEXT_BLOCK_INDEX = "block_index"
CONTEXT_LINE_INDEX = "line_index"
CONTEXT_STAGE = "stage"
CONTEXT_ERROR_CODE = "error_code"
CONTEXT_COMMAND = "command"

TEXT_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
TEXT_DATEFMT = "%Y-%m-%d %H:%M:%S"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# Attributes every LogRecord has; anything else came in through `extra`
_RECORD_ATTRS = frozenset(vars(logging.LogRecord("", 0, "", 0, "", (), None))) | {"message", "asctime"}


class JSONFormatter(logging.Formatter):
    """One JSON object per line: timestamp, level, logger, message, context, exception."""

    def format(self, record: logging.LogRecord) -> str:
        created = datetime.fromtimestamp(record.created, tz=timezone.utc)
        data = {
            "timestamp": created.isoformat().replace("+00:00", "Z"),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        context = {k: v for k, v in vars(record).items() if k not in _RECORD_ATTRS}
        if context:
            data["context"] = context
        if record.exc_info:
            data["exception"] = self.formatException(record.exc_info)
        return json.dumps(data, default=str)


class ProgressAwareHandler(logging.StreamHandler):
    """stderr handler that prints around active tqdm bars."""

    def __init__(self):
        super().__init__(sys.stderr)

    def emit(self, record: logging.LogRecord) -> None:
        try:
            tqdm.write(self.format(record), file=self.stream)
        except Exception:
            self.handleError(record)


@dataclass(frozen=True)
class LogSettings:
    level: str
    json_format: bool
    file_path: Optional[str]

    @classmethod
    def resolve(cls, log_level: str, json_format: bool, file_path: Optional[str]) -> "LogSettings":
        """Arguments, overridden by LOG_LEVEL, LOG_FORMAT and LOG_FILE."""
        level = os.getenv("LOG_LEVEL", log_level).upper()
        fmt = os.getenv("LOG_FORMAT", "json" if json_format else "text").lower()
        return cls(
            level=level if level in LEVELS else "INFO",
            json_format=fmt == "json",
            file_path=os.getenv("LOG_FILE", file_path) or None,
        )

    def formatter(self) -> logging.Formatter:
        if self.json_format:
            return JSONFormatter()
        return logging.Formatter(fmt=TEXT_FORMAT, datefmt=TEXT_DATEFMT)


def configure_logging(
    log_level: str = "INFO",
    json_format: bool = False,
    file_path: Optional[str] = None,
) -> None:
    """Replace the root logger's handlers for one command run.

    Args:
        log_level: DEBUG, INFO, WARNING or ERROR; unknown names mean INFO
        json_format: JSON lines instead of text
        file_path: Extra copy of the log, all levels
    """
    settings = LogSettings.resolve(log_level, json_format, file_path)
    formatter = settings.formatter()

    root = logging.getLogger()
    root.setLevel(settings.level)
    for handler in root.handlers[:]:
        root.removeHandler(handler)

    handler = ProgressAwareHandler()
    handler.setFormatter(formatter)
    root.addHandler(handler)

    if settings.file_path:
        setup_file_logging(settings.file_path, formatter)

    root.debug(
        "Logging configured",
        extra={"log_level": settings.level, "json": settings.json_format, "log_file": settings.file_path},
    )


def setup_file_logging(file_path: str, formatter: Optional[logging.Formatter] = None) -> None:
    """Raises OSError when the log directory cannot be created."""
    Path(file_path).parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(file_path, encoding="utf-8")
    handler.setFormatter(formatter or logging.Formatter(fmt=TEXT_FORMAT, datefmt=TEXT_DATEFMT))
    logging.getLogger().addHandler(handler)


def log_performance(
    logger: logging.Logger,
    operation: str,
    duration_ms: int,
    threshold_ms: Optional[int] = None,
    **context: Any,
) -> None:
    """Timing line for a corpus-level step; WARNING above threshold_ms."""
    extra = {"operation": operation, "duration_ms": duration_ms, **context}
    if threshold_ms and duration_ms > threshold_ms:
        extra["threshold_ms"] = threshold_ms
        logger.warning(f"Slow {operation}: {duration_ms}ms (threshold {threshold_ms}ms)", extra=extra)
    else:
        logger.info(f"{operation} took {duration_ms}ms", extra=extra)
