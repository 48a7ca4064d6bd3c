"""Run configuration: schema, file loading, CLI overrides and validation."""

from amrsmith.config.loader import apply_overrides, config_to_dict, load_config
from amrsmith.config.schema import RunConfig
from amrsmith.config.validator import validate_config

__all__ = ["RunConfig", "apply_overrides", "config_to_dict", "load_config", "validate_config"]
