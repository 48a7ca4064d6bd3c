"""Fine-grained evaluation views.

Each MetricKind transforms the scoring triples of both graphs before
scoring. Views that keep variables go through the mapping search; views
without variables (concepts, wiki links) are scored as bags of labels.
"""

import logging
import re
from collections import Counter
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from amrsmith.amr.models import AmrGraph, Var
from amrsmith.amr.triples import INSTANCE_LABEL, TOP_LABEL, Triple, TripleKind, invert_relation
from amrsmith.smatch.models import MetricKind, ScoreReport
from amrsmith.smatch.scorer import (
    DEFAULT_RESTARTS,
    check_aligned,
    pair_rng,
    score_triples,
    scoring_triples,
)
from amrsmith.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

UNLABELED_RELATION = "rel"
SENSE_SUFFIX_RE = re.compile(r"-\d{2,}$")
OP_RE = re.compile(r"op\d+")
SRL_RE = re.compile(r"ARG\d+(-of)?")

Transform = Callable[[AmrGraph, List[Triple]], List[Triple]]


def bag_score(pred: Sequence[str], gold: Sequence[str]) -> ScoreReport:
    """Multiset overlap of two label bags."""
    matched = sum((Counter(pred) & Counter(gold)).values())
    return ScoreReport(matched, len(pred), len(gold))


def _unlabeled(graph: AmrGraph, triples: List[Triple]) -> List[Triple]:
    return [
        t if t.label in (INSTANCE_LABEL, TOP_LABEL)
        else Triple(t.kind, UNLABELED_RELATION, t.arg1, t.arg2)
        for t in triples
    ]


def _no_wsd(graph: AmrGraph, triples: List[Triple]) -> List[Triple]:
    return [
        Triple(t.kind, t.label, t.arg1, SENSE_SUFFIX_RE.sub("", t.arg2))
        if t.kind is TripleKind.INSTANCE else t
        for t in triples
    ]


def _instances_of(triples: List[Triple], variables) -> List[Triple]:
    return [t for t in triples if t.kind is TripleKind.INSTANCE and t.arg1 in variables]


def _named_entities(graph: AmrGraph, triples: List[Triple]) -> List[Triple]:
    entities = set()
    names = set()
    for edge in graph.edges:
        if edge.label == "name" and isinstance(edge.target, Var):
            entities.add(edge.source)
            names.add(edge.target.id)
    ops = [
        t for t in triples
        if t.kind is TripleKind.ATTRIBUTE and t.arg1 in names and OP_RE.fullmatch(t.label)
    ]
    return _instances_of(triples, entities) + ops


def _negations(graph: AmrGraph, triples: List[Triple]) -> List[Triple]:
    """Negative polarity attributes only; the negated concepts are not compared."""
    return [
        t for t in triples
        if t.kind is TripleKind.ATTRIBUTE and t.label == "polarity" and t.arg2 == "-"
    ]


def _with_endpoints(triples: List[Triple], relations: List[Triple]) -> List[Triple]:
    endpoints = {t.arg1 for t in relations} | {t.arg2 for t in relations}
    return _instances_of(triples, endpoints) + relations


def _reentrancy(graph: AmrGraph, triples: List[Triple]) -> List[Triple]:
    def target(t: Triple) -> str:
        return t.arg1 if invert_relation(t.label)[1] else t.arg2

    relations = [t for t in triples if t.kind is TripleKind.RELATION]
    degree = Counter(target(t) for t in relations)
    return _with_endpoints(triples, [t for t in relations if degree[target(t)] >= 2])


def _srl(graph: AmrGraph, triples: List[Triple]) -> List[Triple]:
    relations = [
        t for t in triples
        if t.kind is TripleKind.RELATION and SRL_RE.fullmatch(t.label)
    ]
    return _with_endpoints(triples, relations)


TRANSFORMS: Dict[MetricKind, Transform] = {
    MetricKind.UNLABELED: _unlabeled,
    MetricKind.NO_WSD: _no_wsd,
    MetricKind.NAMED_ENTITIES: _named_entities,
    MetricKind.NEGATIONS: _negations,
    MetricKind.REENTRANCY: _reentrancy,
    MetricKind.SRL: _srl,
}


def _bag(graph: AmrGraph, metric: MetricKind) -> List[str]:
    if metric is MetricKind.CONCEPTS:
        return list(graph.instances.values())
    return [
        e.target.literal for e in graph.edges
        if e.label == "wiki" and e.is_attribute
    ]


def fine_grained(
    pred: AmrGraph,
    gold: AmrGraph,
    metric: MetricKind = MetricKind.SMATCH,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
    pair_index: int = 0,
    normalize_inverse: bool = False,
) -> ScoreReport:
    """Score one pair under a metric view."""
    metric = MetricKind(metric)
    if metric in (MetricKind.CONCEPTS, MetricKind.WIKIFICATION):
        return bag_score(_bag(pred, metric), _bag(gold, metric))

    pred_triples = scoring_triples(pred, normalize_inverse)
    gold_triples = scoring_triples(gold, normalize_inverse)
    transform = TRANSFORMS.get(metric)
    if transform is not None:
        pred_triples = transform(pred, pred_triples)
        gold_triples = transform(gold, gold_triples)
    report, _ = score_triples(
        pred_triples, gold_triples, restarts=restarts, rng=pair_rng(seed, pair_index)
    )
    return report


def _breakdown_indexed(
    item: Tuple[int, AmrGraph, AmrGraph],
    metrics: Sequence[MetricKind],
    **options,
) -> Dict[MetricKind, ScoreReport]:
    index, pred, gold = item
    return {
        metric: fine_grained(pred, gold, metric, pair_index=index, **options)
        for metric in metrics
    }


def corpus_breakdown(
    preds: Sequence[AmrGraph],
    golds: Sequence[AmrGraph],
    metrics: Optional[Sequence[MetricKind]] = None,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
    normalize_inverse: bool = False,
    jobs: int = 1,
    progress: bool = False,
) -> Dict[MetricKind, ScoreReport]:
    """Micro-averaged score per metric view, in MetricKind order.

    Raises:
        LengthMismatchError: Corpora differ in length
        EmptyCorpusError: No pairs to score
    """
    check_aligned(preds, golds)
    metrics = list(metrics) if metrics is not None else list(MetricKind)
    score_one = partial(
        _breakdown_indexed,
        metrics=metrics,
        restarts=restarts,
        seed=seed,
        normalize_inverse=normalize_inverse,
    )
    items = [(i, p, g) for i, (p, g) in enumerate(zip(preds, golds))]
    per_pair = ordered_map(score_one, items, jobs=jobs, progress=progress, desc="breakdown")
    totals = {
        metric: ScoreReport.combine(scores[metric] for scores in per_pair)
        for metric in metrics
    }
    logger.info(
        f"Computed {len(metrics)} metric views over {len(per_pair)} pairs",
        extra={"pairs": len(per_pair), "metrics": [m.value for m in metrics]},
    )
    return totals
