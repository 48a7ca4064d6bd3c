"""Configuration schema definitions using dataclasses."""

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class LoggingConfig:
    """Logging configuration.

    All log output goes to stderr; stdout carries command results only.
    """
    level: str = "INFO"  # DEBUG, INFO, WARNING, ERROR
    json_format: bool = False  # True for machine-readable run logs
    file: Optional[str] = None  # Extra copy of the log for long corpus runs


@dataclass(frozen=True)
class SmatchConfig:
    restarts: int = 4
    normalize_inverse: bool = False


@dataclass(frozen=True)
class PreprocessConfig:
    strip_wiki: bool = False
    reorder: str = "none"  # best, alpha, consistency, none
    double: bool = False
    alignments_format: str = "jamr"  # jamr, tsv, isi


@dataclass(frozen=True)
class TokenizeConfig:
    mode: str = "amr"  # amr, sent
    super_relations: bool = False
    pos: bool = False
    depth_parens: bool = False


@dataclass(frozen=True)
class PostprocessConfig:
    prune: int = 4  # 0 disables pruning
    coref: bool = True


@dataclass(frozen=True)
class WikiConfig:
    """Wikification backend: a gazetteer file or an entity-linking service."""
    gazetteer: Optional[str] = None
    url: Optional[str] = None
    timeout_seconds: float = 2.0
    retries: int = 3
    max_concurrency: int = 8


@dataclass(frozen=True)
class SilverConfig:
    threshold: float = 55.0
    inclusive: bool = False
    camr_fraction: float = 1.0


@dataclass(frozen=True)
class RunConfig:
    """Top-level run configuration."""
    seed: int = 0
    jobs: int = 1
    quiet: bool = False
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    smatch: SmatchConfig = field(default_factory=SmatchConfig)
    preprocess: PreprocessConfig = field(default_factory=PreprocessConfig)
    tokenize: TokenizeConfig = field(default_factory=TokenizeConfig)
    postprocess: PostprocessConfig = field(default_factory=PostprocessConfig)
    wiki: WikiConfig = field(default_factory=WikiConfig)
    silver: SilverConfig = field(default_factory=SilverConfig)


SECTIONS = {
    "logging": LoggingConfig,
    "smatch": SmatchConfig,
    "preprocess": PreprocessConfig,
    "tokenize": TokenizeConfig,
    "postprocess": PostprocessConfig,
    "wiki": WikiConfig,
    "silver": SilverConfig,
}
