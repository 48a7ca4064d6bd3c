"""Seeded sampling of kept candidates into a CAMR/JAMR mix."""

import logging
import random
from typing import List, Sequence

from amrsmith.silver.models import MixedRecord, MixSpec, SilverCandidate, Source
from amrsmith.utils.errors import InsufficientCandidatesError

logger = logging.getLogger(__name__)


def mix(kept: Sequence[SilverCandidate], mix_spec: MixSpec) -> List[MixedRecord]:
    """Sample mix_spec.total sentences and give each exactly one parse.

    The first camr_count sampled sentences take their CAMR parse and the rest
    their JAMR parse; the result is then shuffled. Everything draws from one
    RNG seeded with mix_spec.seed, so the output only depends on the inputs.

    Raises:
        InsufficientCandidatesError: Fewer kept candidates than mix_spec.total
    """
    if mix_spec.total < 0 or not 0.0 <= mix_spec.camr_fraction <= 1.0:
        raise ValueError(f"Invalid mix settings: {mix_spec}")
    if len(kept) < mix_spec.total:
        raise InsufficientCandidatesError(
            f"Requested {mix_spec.total} sentences but only {len(kept)} candidates were kept",
            code="silver_insufficient_candidates",
            details={"requested": mix_spec.total, "available": len(kept)},
        )

    rng = random.Random(mix_spec.seed)
    sample = rng.sample(list(kept), mix_spec.total)
    records = []
    for position, candidate in enumerate(sample):
        source = Source.CAMR if position < mix_spec.camr_count else Source.JAMR
        records.append(MixedRecord(candidate.sentence, candidate.parse(source).graph, source))
    rng.shuffle(records)

    logger.info(
        f"Mixed {mix_spec.camr_count} CAMR and {mix_spec.jamr_count} JAMR parses",
        extra={"camr": mix_spec.camr_count, "jamr": mix_spec.jamr_count, "seed": mix_spec.seed},
    )
    return records
