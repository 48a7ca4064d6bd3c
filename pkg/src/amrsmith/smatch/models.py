"""SMATCH result models."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List

from amrsmith.utils.errors import InvalidGraphError


class MetricKind(str, Enum):
    """Scoring view; each applies a fixed triple transformation before scoring."""
    SMATCH = "smatch"
    UNLABELED = "unlabeled"
    NO_WSD = "no-wsd"
    CONCEPTS = "concepts"
    NAMED_ENTITIES = "named-entities"
    WIKIFICATION = "wikification"
    NEGATIONS = "negations"
    REENTRANCY = "reentrancy"
    SRL = "srl"

    @property
    def title(self) -> str:
        return _TITLES[self]


_TITLES = {
    MetricKind.SMATCH: "Smatch",
    MetricKind.UNLABELED: "Unlabeled",
    MetricKind.NO_WSD: "No WSD",
    MetricKind.CONCEPTS: "Concepts",
    MetricKind.NAMED_ENTITIES: "Named Ent.",
    MetricKind.WIKIFICATION: "Wikification",
    MetricKind.NEGATIONS: "Negations",
    MetricKind.REENTRANCY: "Reentrancy",
    MetricKind.SRL: "SRL",
}


@dataclass(frozen=True)
class ScoreReport:
    """Matched-triple counts with derived precision, recall and F."""
    matched: int
    pred_total: int
    gold_total: int

    @property
    def precision(self) -> float:
        return self.matched / self.pred_total if self.pred_total else 0.0

    @property
    def recall(self) -> float:
        return self.matched / self.gold_total if self.gold_total else 0.0

    @property
    def f(self) -> float:
        # Equal to 2PR/(P+R) and exact for equal totals
        if not self.matched:
            return 0.0
        return 2 * self.matched / (self.pred_total + self.gold_total)

    def __add__(self, other: "ScoreReport") -> "ScoreReport":
        return ScoreReport(
            self.matched + other.matched,
            self.pred_total + other.pred_total,
            self.gold_total + other.gold_total,
        )

    @classmethod
    def combine(cls, reports: Iterable["ScoreReport"]) -> "ScoreReport":
        """Micro-average: sum the counts, then derive P/R/F."""
        total = cls(0, 0, 0)
        for report in reports:
            total = total + report
        return total

    def summary_line(self) -> str:
        return f"P {self.precision:.4f} R {self.recall:.4f} F {self.f:.4f}"


@dataclass(frozen=True)
class VariableMapping:
    """Partial injective map from predicted to gold variables."""
    pairs: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.pairs.values())) != len(self.pairs):
            raise InvalidGraphError(
                "Variable mapping is not injective",
                code="smatch_invalid_mapping",
                details={"pairs": dict(self.pairs)},
            )

    def __getitem__(self, variable: str) -> str:
        return self.pairs[variable]

    def __len__(self) -> int:
        return len(self.pairs)

    def get(self, variable: str, default=None):
        return self.pairs.get(variable, default)


@dataclass(frozen=True)
class CorpusScore:
    """Micro-averaged corpus score with the per-pair reports it sums."""
    total: ScoreReport
    pairs: List[ScoreReport]
