"""SMATCH scoring by hill-climbing over variable mappings.

Triples are compared as sets. A predicted variable i mapped to gold variable
j earns the weight of every instance/attribute triple the pair makes equal;
relation triples earn their weight only when both endpoint pairs are mapped
consistently. The search starts from a concept-seeded mapping plus random
ones and applies the best single reassignment or swap until no move gains.
"""

import logging
import random
from collections import defaultdict
from functools import partial
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from amrsmith.amr.models import AmrGraph
from amrsmith.amr.triples import Triple, TripleKind, to_triples
from amrsmith.smatch.models import CorpusScore, ScoreReport, VariableMapping
from amrsmith.utils.errors import EmptyCorpusError, LengthMismatchError
from amrsmith.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

DEFAULT_RESTARTS = 4
UNMAPPED = -1
# The reference scorer compares TOP triples positionally, never by concept
TOP_VALUE = "top"

Pair = Tuple[int, int]


def scoring_triples(
    graph: AmrGraph,
    normalize_inverse: bool = False,
    kinds: Optional[Set[TripleKind]] = None,
) -> List[Triple]:
    """Triples of a graph as compared by the scorer.

    Args:
        graph: Graph to convert
        normalize_inverse: Invert `-of` relations before matching
        kinds: Keep only these triple kinds (instance-only scoring etc.)
    """
    triples = []
    for triple in to_triples(graph, normalize_inverse=normalize_inverse):
        if kinds is not None and triple.kind not in kinds:
            continue
        if triple.is_top:
            triple = Triple(triple.kind, triple.label, triple.arg1, TOP_VALUE)
        triples.append(triple)
    return triples


def _variables(triples: Iterable[Triple]) -> List[str]:
    seen: Dict[str, None] = {}
    for t in triples:
        seen.setdefault(t.arg1)
        if t.kind is TripleKind.RELATION:
            seen.setdefault(t.arg2)
    return list(seen)


class MatchProblem:
    """Weights of every (pred variable, gold variable) pairing.

    Attributes:
        pred_vars / gold_vars: Variables in first-seen order
        pair_weight: (i, j) → triples matched by i→j alone
        rel_weight: (i, j) → {(k, l): relation triples matched by i→j and k→l}
        candidates: i → gold indices worth mapping i to
    """

    def __init__(self, pred: Sequence[Triple], gold: Sequence[Triple]):
        pred = list(dict.fromkeys(pred))
        gold = list(dict.fromkeys(gold))
        self.pred_total = len(pred)
        self.gold_total = len(gold)
        self.pred_vars = _variables(pred)
        self.gold_vars = _variables(gold)
        p_index = {v: i for i, v in enumerate(self.pred_vars)}
        g_index = {v: i for i, v in enumerate(self.gold_vars)}

        self.pair_weight: Dict[Pair, int] = defaultdict(int)
        self.rel_weight: Dict[Pair, Dict[Pair, int]] = defaultdict(lambda: defaultdict(int))

        gold_by_value: Dict[Tuple[str, str], List[int]] = defaultdict(list)
        gold_by_label: Dict[str, List[Tuple[int, int]]] = defaultdict(list)
        for t in gold:
            if t.kind is TripleKind.RELATION:
                gold_by_label[t.label].append((g_index[t.arg1], g_index[t.arg2]))
            else:
                gold_by_value[(t.label, t.arg2)].append(g_index[t.arg1])

        for t in pred:
            if t.kind is not TripleKind.RELATION:
                i = p_index[t.arg1]
                for j in gold_by_value.get((t.label, t.arg2), ()):
                    self.pair_weight[(i, j)] += 1
                continue
            a, b = p_index[t.arg1], p_index[t.arg2]
            for c, d in gold_by_label.get(t.label, ()):
                if a == b and c == d:
                    self.pair_weight[(a, c)] += 1
                elif a != b and c != d:
                    self.rel_weight[(a, c)][(b, d)] += 1
                    self.rel_weight[(b, d)][(a, c)] += 1

        candidates: List[Set[int]] = [set() for _ in self.pred_vars]
        for i, j in self.pair_weight:
            candidates[i].add(j)
        for i, j in self.rel_weight:
            candidates[i].add(j)
        self.candidates: List[List[int]] = [sorted(c) for c in candidates]

    @property
    def size(self) -> Tuple[int, int]:
        return len(self.pred_vars), len(self.gold_vars)

    def contribution(self, i: int, j: int, mapping: List[int]) -> int:
        """Triples matched through pair i→j given the rest of mapping."""
        if j == UNMAPPED:
            return 0
        weight = self.pair_weight.get((i, j), 0)
        neighbours = self.rel_weight.get((i, j))
        if neighbours:
            for (k, l), count in neighbours.items():
                if k != i and mapping[k] == l:
                    weight += count
        return weight

    def _between(self, i: int, a: int, k: int, b: int) -> int:
        if a == UNMAPPED or b == UNMAPPED:
            return 0
        neighbours = self.rel_weight.get((i, a))
        return neighbours.get((k, b), 0) if neighbours else 0

    def score(self, mapping: List[int]) -> int:
        total = 0
        for i, j in enumerate(mapping):
            if j == UNMAPPED:
                continue
            total += self.pair_weight.get((i, j), 0)
            neighbours = self.rel_weight.get((i, j))
            if neighbours:
                for (k, l), count in neighbours.items():
                    if k > i and mapping[k] == l:
                        total += count
        return total

    def move_gain(self, mapping: List[int], i: int, j: int) -> int:
        return self.contribution(i, j, mapping) - self.contribution(i, mapping[i], mapping)

    def swap_gain(self, mapping: List[int], i: int, k: int) -> int:
        a, b = mapping[i], mapping[k]
        old = (
            self.contribution(i, a, mapping)
            + self.contribution(k, b, mapping)
            - self._between(i, a, k, b)
        )
        mapping[i], mapping[k] = b, a
        new = (
            self.contribution(i, b, mapping)
            + self.contribution(k, a, mapping)
            - self._between(i, b, k, a)
        )
        mapping[i], mapping[k] = a, b
        return new - old

    def mapping_pairs(self, mapping: List[int]) -> VariableMapping:
        return VariableMapping({
            self.pred_vars[i]: self.gold_vars[j]
            for i, j in enumerate(mapping)
            if j != UNMAPPED
        })


def _concept_seeded_mapping(
    problem: MatchProblem,
    pred: Sequence[Triple],
    gold: Sequence[Triple],
    rng: random.Random,
) -> List[int]:
    """Map each predicted variable to the first unused gold variable with its concept."""
    gold_concepts: Dict[str, List[int]] = defaultdict(list)
    g_index = {v: i for i, v in enumerate(problem.gold_vars)}
    for t in gold:
        if t.kind is TripleKind.INSTANCE:
            gold_concepts[t.arg2].append(g_index[t.arg1])
    p_index = {v: i for i, v in enumerate(problem.pred_vars)}
    mapping = [UNMAPPED] * len(problem.pred_vars)
    used: Set[int] = set()
    for t in pred:
        if t.kind is not TripleKind.INSTANCE:
            continue
        i = p_index[t.arg1]
        if mapping[i] != UNMAPPED:
            continue
        for j in gold_concepts.get(t.arg2, ()):
            if j not in used:
                mapping[i] = j
                used.add(j)
                break
    for i, current in enumerate(mapping):
        if current == UNMAPPED:
            free = [j for j in problem.candidates[i] if j not in used]
            if free:
                mapping[i] = rng.choice(free)
                used.add(mapping[i])
    return mapping


def _random_mapping(problem: MatchProblem, rng: random.Random) -> List[int]:
    mapping = [UNMAPPED] * len(problem.pred_vars)
    used: Set[int] = set()
    order = list(range(len(problem.pred_vars)))
    rng.shuffle(order)
    for i in order:
        free = [j for j in problem.candidates[i] if j not in used]
        if free:
            mapping[i] = rng.choice(free)
            used.add(mapping[i])
    return mapping


def _hill_climb(problem: MatchProblem, mapping: List[int]) -> Tuple[List[int], int]:
    """Apply the best-gain move until none improves the score."""
    score = problem.score(mapping)
    n = len(mapping)
    while True:
        best_gain = 0
        best_move: Optional[Tuple[str, int, int]] = None
        used = {j for j in mapping if j != UNMAPPED}
        for i in range(n):
            for j in problem.candidates[i]:
                if j == mapping[i] or j in used:
                    continue
                gain = problem.move_gain(mapping, i, j)
                if gain > best_gain:
                    best_gain, best_move = gain, ("move", i, j)
        for i in range(n):
            for k in range(i + 1, n):
                if mapping[i] == mapping[k]:
                    continue
                gain = problem.swap_gain(mapping, i, k)
                if gain > best_gain:
                    best_gain, best_move = gain, ("swap", i, k)
        if best_move is None:
            return mapping, score
        kind, i, other = best_move
        if kind == "move":
            mapping[i] = other
        else:
            mapping[i], mapping[other] = mapping[other], mapping[i]
        score += best_gain


def pair_rng(seed: int, pair_index: int) -> random.Random:
    """RNG for one pair, independent of how pairs are scheduled."""
    return random.Random(seed * 1_000_003 + pair_index)


def score_triples(
    pred: Sequence[Triple],
    gold: Sequence[Triple],
    restarts: int = DEFAULT_RESTARTS,
    rng: Optional[random.Random] = None,
) -> Tuple[ScoreReport, VariableMapping]:
    """Best mapping found for two triple lists.

    Raises:
        ValueError: restarts < 1
    """
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    rng = rng or random.Random(0)
    problem = MatchProblem(pred, gold)
    ceiling = min(problem.pred_total, problem.gold_total)

    best_score = -1
    best_mapping: List[int] = [UNMAPPED] * len(problem.pred_vars)
    for attempt in range(restarts):
        if attempt == 0:
            start = _concept_seeded_mapping(problem, pred, gold, rng)
        else:
            start = _random_mapping(problem, rng)
        mapping, score = _hill_climb(problem, start)
        if score > best_score:
            best_score, best_mapping = score, list(mapping)
        if best_score >= ceiling:
            break

    report = ScoreReport(max(best_score, 0), problem.pred_total, problem.gold_total)
    return report, problem.mapping_pairs(best_mapping)


def smatch(
    pred: AmrGraph,
    gold: AmrGraph,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
    pair_index: int = 0,
    normalize_inverse: bool = False,
    kinds: Optional[Set[TripleKind]] = None,
) -> Tuple[ScoreReport, VariableMapping]:
    """SMATCH between a predicted and a gold graph.

    Deterministic given the graphs, restarts, seed and pair_index.

    Args:
        pred: Predicted graph
        gold: Gold graph
        restarts: Number of starting mappings (one concept-seeded, the rest random)
        seed: Global seed
        pair_index: Position of the pair in its corpus, mixed into the seed
        normalize_inverse: Invert `-of` relations before matching
        kinds: Restrict scoring to these triple kinds
    """
    return score_triples(
        scoring_triples(pred, normalize_inverse, kinds),
        scoring_triples(gold, normalize_inverse, kinds),
        restarts=restarts,
        rng=pair_rng(seed, pair_index),
    )


def check_aligned(preds: Sequence, golds: Sequence) -> None:
    """Raises LengthMismatchError / EmptyCorpusError for unusable corpora."""
    if len(preds) != len(golds):
        raise LengthMismatchError(
            f"Corpora differ in length: {len(preds)} predicted vs {len(golds)} gold",
            code="corpus_length_mismatch",
            details={"pred_count": len(preds), "gold_count": len(golds)},
        )
    if not preds:
        raise EmptyCorpusError("Cannot score an empty corpus", code="corpus_empty")


def _score_indexed(item: Tuple[int, AmrGraph, AmrGraph], **options) -> ScoreReport:
    index, pred, gold = item
    report, _ = smatch(pred, gold, pair_index=index, **options)
    return report


def corpus_smatch(
    preds: Sequence[AmrGraph],
    golds: Sequence[AmrGraph],
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
    normalize_inverse: bool = False,
    kinds: Optional[Set[TripleKind]] = None,
    jobs: int = 1,
    progress: bool = False,
) -> CorpusScore:
    """Micro-averaged SMATCH over aligned corpora.

    Raises:
        LengthMismatchError: Corpora differ in length
        EmptyCorpusError: No pairs to score
    """
    check_aligned(preds, golds)
    score_one = partial(
        _score_indexed,
        restarts=restarts,
        seed=seed,
        normalize_inverse=normalize_inverse,
        kinds=kinds,
    )
    items = [(i, p, g) for i, (p, g) in enumerate(zip(preds, golds))]
    reports = ordered_map(score_one, items, jobs=jobs, progress=progress, desc="smatch")
    total = ScoreReport.combine(reports)
    logger.info(
        f"Scored {len(reports)} pairs: {total.summary_line()}",
        extra={"pairs": len(reports), "restarts": restarts, "seed": seed},
    )
    return CorpusScore(total, reports)
