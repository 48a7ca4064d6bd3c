"""Exhaustive SMATCH for small graphs, used to check the hill-climber."""

from typing import List, Optional, Set

from amrsmith.amr.models import AmrGraph
from amrsmith.amr.triples import TripleKind
from amrsmith.smatch.models import ScoreReport
from amrsmith.smatch.scorer import UNMAPPED, MatchProblem, scoring_triples
from amrsmith.utils.errors import SearchSpaceTooLargeError

ORACLE_MAX_VARIABLES = 8


def smatch_oracle(
    pred: AmrGraph,
    gold: AmrGraph,
    normalize_inverse: bool = False,
    kinds: Optional[Set[TripleKind]] = None,
) -> ScoreReport:
    """Exact optimum over every injective (possibly partial) mapping.

    The smaller variable set is enumerated; each of its variables is mapped
    to an unused variable it could match or left unmapped.

    Raises:
        SearchSpaceTooLargeError: Both graphs have more than eight variables
    """
    pred_triples = scoring_triples(pred, normalize_inverse, kinds)
    gold_triples = scoring_triples(gold, normalize_inverse, kinds)
    smaller = min(len(pred.instances), len(gold.instances))
    if smaller > ORACLE_MAX_VARIABLES:
        raise SearchSpaceTooLargeError(
            f"Exhaustive search needs at most {ORACLE_MAX_VARIABLES} variables on one side, "
            f"got {len(pred.instances)} and {len(gold.instances)}",
            code="smatch_too_large",
            details={"pred_variables": len(pred.instances), "gold_variables": len(gold.instances)},
        )

    # Matching is symmetric, so search from whichever side is smaller
    if len(gold.instances) < len(pred.instances):
        problem = MatchProblem(gold_triples, pred_triples)
        report_of = lambda m: ScoreReport(m, problem.gold_total, problem.pred_total)
    else:
        problem = MatchProblem(pred_triples, gold_triples)
        report_of = lambda m: ScoreReport(m, problem.pred_total, problem.gold_total)

    n = len(problem.pred_vars)
    mapping: List[int] = [UNMAPPED] * n
    used: Set[int] = set()
    best = 0

    def search(i: int) -> None:
        nonlocal best
        if i == n:
            best = max(best, problem.score(mapping))
            return
        for j in problem.candidates[i]:
            if j in used:
                continue
            mapping[i] = j
            used.add(j)
            search(i + 1)
            used.discard(j)
        mapping[i] = UNMAPPED
        search(i + 1)

    search(0)
    return report_of(best)
