"""Silver-data curation models."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from amrsmith.amr.models import AmrGraph
from amrsmith.utils.errors import AmrsmithError

HISTOGRAM_BINS = 20
DEFAULT_THRESHOLD = 55.0


class Source(str, Enum):
    CAMR = "camr"
    JAMR = "jamr"


class DropReason(str, Enum):
    INVALID = "invalid"
    NULL_TAG = "null-tag"
    NULL_EDGE = "null-edge"
    LOW_AGREEMENT = "low-agreement"


@dataclass(frozen=True)
class ParseResult:
    """One parser's output for a sentence: the text and its graph if it parses."""
    text: str
    graph: Optional[AmrGraph] = None
    error: Optional[AmrsmithError] = None

    @property
    def valid(self) -> bool:
        return self.graph is not None


@dataclass(frozen=True)
class SilverCandidate:
    """Both parses of one sentence; agreement is SMATCH F on a 0–100 scale."""
    index: int
    sentence: str
    camr: ParseResult
    jamr: ParseResult
    agreement: Optional[float] = None

    def parse(self, source: Source) -> ParseResult:
        return self.camr if source is Source.CAMR else self.jamr


@dataclass(frozen=True)
class FilterDecision:
    keep: bool
    reason: Optional[DropReason] = None

    @classmethod
    def kept(cls) -> "FilterDecision":
        return cls(True)

    @classmethod
    def drop(cls, reason: DropReason) -> "FilterDecision":
        return cls(False, reason)


@dataclass(frozen=True)
class MixSpec:
    """How many sentences to take and which share gets the CAMR parse."""
    total: int
    camr_fraction: float = 1.0
    seed: int = 0

    @property
    def camr_count(self) -> int:
        # round() is round-half-to-even
        return round(self.camr_fraction * self.total)

    @property
    def jamr_count(self) -> int:
        return self.total - self.camr_count


@dataclass(frozen=True)
class MixedRecord:
    sentence: str
    graph: AmrGraph
    source: Source


@dataclass
class CurationReport:
    """Counts for one curation run; serialized as the JSON report."""
    total: int = 0
    dropped: Dict[str, int] = field(default_factory=lambda: {r.value: 0 for r in DropReason})
    kept: int = 0
    mixed: Dict[str, int] = field(default_factory=lambda: {s.value: 0 for s in Source})
    threshold: float = DEFAULT_THRESHOLD
    inclusive: bool = False
    histogram: List[int] = field(default_factory=lambda: [0] * HISTOGRAM_BINS)

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "dropped": dict(self.dropped),
            "kept": self.kept,
            "mixed": dict(self.mixed),
            "threshold": self.threshold,
            "inclusive": self.inclusive,
            "histogram": {
                "bin_width": 100 / HISTOGRAM_BINS,
                "counts": list(self.histogram),
            },
        }


@dataclass
class CurationResult:
    records: List[MixedRecord]
    report: CurationReport
