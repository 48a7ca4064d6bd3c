"""End-to-end evaluation of raw model output."""

from amrsmith.eval.models import EvalOptions, EvalResult
from amrsmith.eval.reporter import ScoreReporter
from amrsmith.eval.runner import evaluate, pipeline_eval, read_raw_lines

__all__ = [
    "EvalOptions",
    "EvalResult",
    "ScoreReporter",
    "evaluate",
    "pipeline_eval",
    "read_raw_lines",
]
