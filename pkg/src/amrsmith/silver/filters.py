"""Quality filters for silver candidates.

Rules run in a fixed order and the first failing one names the drop reason:

1. invalid        either parse does not read as an AMR
2. null-tag       either parse carries a `null-tag` token
3. null-edge      either parse carries a `null-edge` token
4. low-agreement  SMATCH F between the two parses does not exceed the threshold
"""

import logging
import re
from dataclasses import replace

from amrsmith.silver.models import (
    DEFAULT_THRESHOLD,
    DropReason,
    FilterDecision,
    ParseResult,
    SilverCandidate,
)
from amrsmith.smatch.scorer import DEFAULT_RESTARTS, smatch

logger = logging.getLogger(__name__)

# The marker may be a concept, a constant or a relation (`:null-edge`).
NULL_TAG_RE = re.compile(r'(?<![^\s()/:"])null-tag(?![^\s()"~])')
NULL_EDGE_RE = re.compile(r'(?<![^\s()/:"])null-edge(?![^\s()"~])')


def _has_token(parse: ParseResult, pattern: re.Pattern) -> bool:
    return pattern.search(parse.text) is not None


def validity_filter(candidate: SilverCandidate) -> FilterDecision:
    """Structural checks that need no scoring."""
    parses = (candidate.camr, candidate.jamr)
    if not all(p.valid for p in parses):
        return FilterDecision.drop(DropReason.INVALID)
    if any(_has_token(p, NULL_TAG_RE) for p in parses):
        return FilterDecision.drop(DropReason.NULL_TAG)
    if any(_has_token(p, NULL_EDGE_RE) for p in parses):
        return FilterDecision.drop(DropReason.NULL_EDGE)
    return FilterDecision.kept()


def agreement(
    candidate: SilverCandidate,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
) -> float:
    """SMATCH F between the two parses on a 0–100 scale.

    Raises:
        ValueError: A parse is invalid
    """
    if candidate.agreement is not None:
        return candidate.agreement
    if not (candidate.camr.valid and candidate.jamr.valid):
        raise ValueError(f"Candidate {candidate.index} has an invalid parse")
    report, _ = smatch(
        candidate.camr.graph,
        candidate.jamr.graph,
        restarts=restarts,
        seed=seed,
        pair_index=candidate.index,
    )
    return round(100 * report.f, 9)


def with_agreement(
    candidate: SilverCandidate,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
) -> SilverCandidate:
    return replace(candidate, agreement=agreement(candidate, restarts, seed))


def agreement_filter(
    candidate: SilverCandidate,
    threshold: float = DEFAULT_THRESHOLD,
    inclusive: bool = False,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
) -> FilterDecision:
    """Keep a candidate whose agreement exceeds the threshold.

    Args:
        candidate: A candidate that passed validity_filter
        threshold: F on a 0–100 scale
        inclusive: Keep agreement equal to the threshold too
        restarts: SMATCH restarts when agreement is not yet known
        seed: Global seed for SMATCH
    """
    score = agreement(candidate, restarts, seed)
    passed = score >= threshold if inclusive else score > threshold
    if passed:
        return FilterDecision.kept()
    logger.debug(
        f"Candidate {candidate.index} agreement {score:.2f} below threshold {threshold}",
        extra={"candidate_index": candidate.index, "agreement": score},
    )
    return FilterDecision.drop(DropReason.LOW_AGREEMENT)

