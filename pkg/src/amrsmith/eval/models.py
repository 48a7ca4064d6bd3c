"""Pipeline evaluation models."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from amrsmith.postprocess.models import PipelineResult, PostprocessOptions
from amrsmith.smatch.models import CorpusScore, MetricKind, ScoreReport
from amrsmith.smatch.scorer import DEFAULT_RESTARTS


@dataclass(frozen=True)
class EvalOptions:
    """How raw output is postprocessed and scored.

    Attributes:
        postprocess: Stage switches for the postprocess pipeline
        restarts: SMATCH restarts per pair
        seed: Global seed
        normalize_inverse: Invert `-of` relations before scoring
        breakdown: Also compute the fine-grained metric table
        jobs: Worker processes
        progress: Show progress bars on stderr
    """
    postprocess: PostprocessOptions = field(default_factory=PostprocessOptions)
    restarts: int = DEFAULT_RESTARTS
    seed: int = 0
    normalize_inverse: bool = False
    breakdown: bool = False
    jobs: int = 1
    progress: bool = False


@dataclass
class EvalResult:
    """Postprocessed graphs with their corpus score."""
    results: List[PipelineResult]
    score: CorpusScore
    breakdown: Optional[Dict[MetricKind, ScoreReport]] = None
    duration: float = 0.0

    @property
    def total(self) -> ScoreReport:
        return self.score.total
