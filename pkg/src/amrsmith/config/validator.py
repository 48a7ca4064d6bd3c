"""Range and choice checks for a resolved run configuration."""

from typing import Any, Iterable

from amrsmith.config.schema import RunConfig
from amrsmith.postprocess.models import PruneMethod
from amrsmith.preprocess.alignments import AlignmentFormat
from amrsmith.preprocess.reorder import ReorderMode
from amrsmith.utils.errors import ConfigurationError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
TOKENIZE_MODES = ("amr", "sent")


def _fail(field: str, value: Any, message: str) -> ConfigurationError:
    return ConfigurationError(
        message=f"Invalid config field {field}: {message}",
        code="config_invalid_value",
        details={"field": field, "value": value},
    )


def _check_choice(field: str, value: str, choices: Iterable[str]) -> None:
    choices = list(choices)
    if value not in choices:
        raise _fail(field, value, f"must be one of {', '.join(choices)}")


def validate_config(config: RunConfig) -> None:
    """Validate a complete run configuration.

    Raises:
        ConfigurationError: If any value is out of range
    """
    if config.jobs < 1:
        raise _fail("jobs", config.jobs, "must be at least 1")
    if config.smatch.restarts < 1:
        raise _fail("smatch.restarts", config.smatch.restarts, "must be at least 1")
    if config.postprocess.prune not in {m.value for m in PruneMethod}:
        raise _fail("postprocess.prune", config.postprocess.prune, "must be between 0 and 4")
    if not 0.0 <= config.silver.camr_fraction <= 1.0:
        raise _fail("silver.camr_fraction", config.silver.camr_fraction, "must be between 0 and 1")
    if not 0.0 <= config.silver.threshold <= 100.0:
        raise _fail("silver.threshold", config.silver.threshold, "must be between 0 and 100")
    if config.wiki.timeout_seconds <= 0:
        raise _fail("wiki.timeout_seconds", config.wiki.timeout_seconds, "must be positive")
    if config.wiki.retries < 1:
        raise _fail("wiki.retries", config.wiki.retries, "must be at least 1")
    if config.wiki.max_concurrency < 1:
        raise _fail("wiki.max_concurrency", config.wiki.max_concurrency, "must be at least 1")
    if config.wiki.gazetteer and config.wiki.url:
        raise _fail("wiki", config.wiki.url, "set either gazetteer or url, not both")

    _check_choice("logging.level", config.logging.level.upper(), LOG_LEVELS)
    _check_choice("preprocess.reorder", config.preprocess.reorder, (m.value for m in ReorderMode))
    _check_choice(
        "preprocess.alignments_format",
        config.preprocess.alignments_format,
        (f.value for f in AlignmentFormat),
    )
    _check_choice("tokenize.mode", config.tokenize.mode, TOKENIZE_MODES)
