"""AMR parsing, SMATCH scoring and corpus pipelines for character-level semantic parsing."""

__version__ = "0.1.0"
