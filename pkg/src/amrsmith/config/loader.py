"""Configuration loader for YAML and flat `key = value` files."""

import os
from dataclasses import asdict, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union, get_args, get_origin

import yaml
from dotenv import load_dotenv

from amrsmith.config.schema import SECTIONS, RunConfig
from amrsmith.utils.errors import ConfigurationError

CONFIG_ENV_VAR = "AMRSMITH_CONFIG"
YAML_SUFFIXES = {".yaml", ".yml"}

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


def _invalid_value(key: str, value: Any, expected: str) -> ConfigurationError:
    return ConfigurationError(
        message=f"Invalid value for {key}: {value!r} (expected {expected})",
        code="config_invalid_value",
        details={"field": key, "value": value, "expected": expected},
    )


def coerce_value(key: str, value: Any, target: Any) -> Any:
    """Convert a raw config value to the field's declared type.

    Raises:
        ConfigurationError: Value cannot be read as that type
    """
    if get_origin(target) is Union:
        if value is None or (isinstance(value, str) and not value.strip()):
            return None
        target = next(arg for arg in get_args(target) if arg is not type(None))

    if target is bool:
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in _TRUE:
            return True
        if text in _FALSE:
            return False
        raise _invalid_value(key, value, "a boolean")
    if target is int:
        if isinstance(value, bool):
            raise _invalid_value(key, value, "an integer")
        if isinstance(value, int):
            return value
        try:
            return int(str(value).strip())
        except ValueError:
            raise _invalid_value(key, value, "an integer")
    if target is float:
        if isinstance(value, bool):
            raise _invalid_value(key, value, "a number")
        try:
            return float(value)
        except (TypeError, ValueError):
            raise _invalid_value(key, value, "a number")
    if value is None:
        raise _invalid_value(key, value, "a string")
    return str(value)


def parse_flat(text: str, source: str = "<string>") -> Dict[str, Any]:
    """Read `key = value` lines into a nested dict; dotted keys name sections.

    Raises:
        ConfigurationError: A line is neither blank, a comment nor an assignment
    """
    raw: Dict[str, Any] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigurationError(
                message=f"Expected 'key = value' at line {number}",
                code="config_invalid_line",
                details={"config_path": source, "line": number, "text": stripped},
            )
        value = value.strip()
        if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
            value = value[1:-1]
        section, dot, name = key.partition(".")
        if dot:
            target = raw.setdefault(section, {})
            if not isinstance(target, dict):
                raise ConfigurationError(
                    message=f"{section} is a section, not a value",
                    code="config_invalid_line",
                    details={"config_path": source, "line": number, "text": stripped},
                )
            target[name] = value
        else:
            raw[key] = value
    return raw


def _unknown_key(key: str) -> ConfigurationError:
    return ConfigurationError(
        message=f"Unknown config key: {key}",
        code="config_unknown_key",
        details={"field": key},
    )


def _build_section(name: str, cls: type, current: Any, values: Any) -> Any:
    if not isinstance(values, Mapping):
        raise ConfigurationError(
            message=f"Config section {name} must be a mapping",
            code="config_invalid_value",
            details={"field": name},
        )
    types = {f.name: f.type for f in fields(cls)}
    updates = {}
    for key, value in values.items():
        dotted = f"{name}.{key}"
        if key not in types:
            raise _unknown_key(dotted)
        updates[key] = coerce_value(dotted, value, types[key])
    return replace(current, **updates)


def build_config(raw: Mapping[str, Any], base: Optional[RunConfig] = None) -> RunConfig:
    """Layer a nested raw mapping onto base (defaults when omitted).

    Raises:
        ConfigurationError: Unknown key or a value of the wrong type
    """
    config = base or RunConfig()
    top_types = {f.name: f.type for f in fields(RunConfig) if f.name not in SECTIONS}
    updates: Dict[str, Any] = {}
    for key, value in raw.items():
        if key in SECTIONS:
            updates[key] = _build_section(key, SECTIONS[key], getattr(config, key), value or {})
        elif key in top_types:
            updates[key] = coerce_value(key, value, top_types[key])
        else:
            raise _unknown_key(key)
    return replace(config, **updates)


def read_config_file(config_path: Union[str, Path]) -> Dict[str, Any]:
    """Raw mapping from a YAML or flat config file.

    Raises:
        ConfigurationError: Missing file, bad YAML, or a bad flat line
    """
    config_file = Path(config_path)
    if not config_file.exists():
        raise ConfigurationError(
            message=f"Configuration file not found: {config_path}",
            code="config_file_not_found",
            details={"config_path": str(config_path)},
        )
    text = config_file.read_text(encoding="utf-8")
    if config_file.suffix.lower() not in YAML_SUFFIXES:
        return parse_flat(text, str(config_path))
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigurationError(
            message="Configuration file is not valid YAML",
            code="config_invalid_yaml",
            details={"config_path": str(config_path), "error": str(e)},
        )
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise ConfigurationError(
            message="Configuration file must contain a mapping",
            code="config_invalid_yaml",
            details={"config_path": str(config_path)},
        )
    return raw


def load_config(config_path: Optional[Union[str, Path]] = None) -> RunConfig:
    """Load the run configuration.

    Args:
        config_path: Config file; defaults to $AMRSMITH_CONFIG, then built-in defaults

    Raises:
        ConfigurationError: If the file is missing or invalid
    """
    load_dotenv()
    if config_path is None:
        config_path = os.getenv(CONFIG_ENV_VAR) or None
    if config_path is None:
        return RunConfig()
    return build_config(read_config_file(config_path))


def apply_overrides(config: RunConfig, overrides: Mapping[str, Any]) -> RunConfig:
    """Layer command-line values over a config; None means "not given".

    Keys are top-level field names or dotted `section.field` names.
    """
    raw: Dict[str, Any] = {}
    for key, value in overrides.items():
        if value is None:
            continue
        section, dot, name = key.partition(".")
        if dot:
            raw.setdefault(section, {})[name] = value
        else:
            raw[key] = value
    return build_config(raw, config)


def config_to_dict(config: RunConfig) -> Dict[str, Any]:
    return asdict(config)
