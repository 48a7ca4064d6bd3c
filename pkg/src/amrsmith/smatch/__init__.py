"""SMATCH scoring, exhaustive oracle and fine-grained metric views."""

from amrsmith.smatch.metrics import bag_score, corpus_breakdown, fine_grained
from amrsmith.smatch.models import CorpusScore, MetricKind, ScoreReport, VariableMapping
from amrsmith.smatch.oracle import smatch_oracle
from amrsmith.smatch.scorer import corpus_smatch, score_triples, smatch

__all__ = [
    "CorpusScore",
    "MetricKind",
    "ScoreReport",
    "VariableMapping",
    "bag_score",
    "corpus_breakdown",
    "corpus_smatch",
    "fine_grained",
    "score_triples",
    "smatch",
    "smatch_oracle",
]
