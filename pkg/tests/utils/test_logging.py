"""Tests for structured logging configuration."""

import json
import logging
import sys

import pytest

from amrsmith.utils.logging import (
    CONTEXT_BLOCK_INDEX,
    CONTEXT_STAGE,
    JSONFormatter,
    ProgressAwareHandler,
    configure_logging,
    log_performance,
)


@pytest.fixture(autouse=True)
def clear_log_env(monkeypatch):
    for name in ("LOG_LEVEL", "LOG_FORMAT", "LOG_FILE"):
        monkeypatch.delenv(name, raising=False)


def _record(msg="Test message", level=logging.INFO, **extra):
    record = logging.LogRecord(
        name="amrsmith.test",
        level=level,
        pathname="test.py",
        lineno=1,
        msg=msg,
        args=(),
        exc_info=None,
    )
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_configure_logging_default():
    """Test logging goes to stderr at INFO by default."""
    configure_logging()

    root_logger = logging.getLogger()
    assert root_logger.level == logging.INFO
    assert len(root_logger.handlers) == 1
    assert root_logger.handlers[0].stream is sys.stderr
    assert isinstance(root_logger.handlers[0], ProgressAwareHandler)


def test_configure_logging_replaces_handlers():
    configure_logging()
    configure_logging()
    assert len(logging.getLogger().handlers) == 1


def test_configure_logging_debug_level():
    configure_logging(log_level="debug")
    assert logging.getLogger().level == logging.DEBUG


def test_unknown_level_falls_back_to_info():
    configure_logging(log_level="LOUD")
    assert logging.getLogger().level == logging.INFO


def test_configure_logging_json_format():
    configure_logging(json_format=True)
    assert isinstance(logging.getLogger().handlers[0].formatter, JSONFormatter)


def test_configure_logging_env_override(monkeypatch):
    """Test environment variables win over arguments."""
    monkeypatch.setenv("LOG_LEVEL", "ERROR")
    monkeypatch.setenv("LOG_FORMAT", "json")

    configure_logging(log_level="INFO", json_format=False)

    root_logger = logging.getLogger()
    assert root_logger.level == logging.ERROR
    assert isinstance(root_logger.handlers[0].formatter, JSONFormatter)


def test_file_logging(tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    configure_logging(file_path=str(log_file))

    logging.getLogger("amrsmith.test").warning("Corpus run started")
    for handler in logging.getLogger().handlers:
        handler.flush()

    assert "Corpus run started" in log_file.read_text(encoding="utf-8")
    for handler in logging.getLogger().handlers:
        handler.close()


def test_json_formatter_basic():
    data = json.loads(JSONFormatter().format(_record()))

    assert data["level"] == "INFO"
    assert data["logger"] == "amrsmith.test"
    assert data["message"] == "Test message"
    assert data["timestamp"].endswith("Z")
    assert "context" not in data


def test_json_formatter_context_from_extra():
    """Test extra fields land in the context object."""
    record = _record(**{CONTEXT_BLOCK_INDEX: 4, CONTEXT_STAGE: "prune"})
    data = json.loads(JSONFormatter().format(record))
    assert data["context"] == {"block_index": 4, "stage": "prune"}


def test_json_formatter_exception():
    try:
        raise ValueError("boom")
    except ValueError:
        record = _record(level=logging.ERROR)
        record.exc_info = sys.exc_info()

    data = json.loads(JSONFormatter().format(record))
    assert "ValueError: boom" in data["exception"]


class ListHandler(logging.Handler):
    def __init__(self):
        super().__init__()
        self.records = []

    def emit(self, record):
        self.records.append(record)


@pytest.fixture
def perf_logger():
    logger = logging.getLogger("amrsmith.test.perf")
    handler = ListHandler()
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG)
    yield logger, handler.records
    logger.removeHandler(handler)


def test_log_performance_info(perf_logger):
    logger, records = perf_logger
    log_performance(logger, "silver_agreement", 120, pairs=8)

    assert records[0].levelno == logging.INFO
    assert records[0].duration_ms == 120
    assert records[0].pairs == 8


def test_log_performance_slow(perf_logger):
    logger, records = perf_logger
    log_performance(logger, "silver_agreement", 5000, threshold_ms=1000)

    assert records[0].levelno == logging.WARNING
    assert records[0].threshold_ms == 1000
