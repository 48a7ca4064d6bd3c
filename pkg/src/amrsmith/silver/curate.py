"""End-to-end silver curation from two parsers' corpus files."""

import json
import logging
import time
from functools import partial
from pathlib import Path
from typing import Iterable, List, Sequence, Union

from amrsmith.amr.corpus import RawBlock, load_blocks, write_corpus
from amrsmith.silver.filters import agreement_filter, validity_filter, with_agreement
from amrsmith.silver.mixer import mix
from amrsmith.silver.models import (
    DEFAULT_THRESHOLD,
    HISTOGRAM_BINS,
    CurationReport,
    CurationResult,
    DropReason,
    MixedRecord,
    MixSpec,
    ParseResult,
    SilverCandidate,
)
from amrsmith.smatch.scorer import DEFAULT_RESTARTS
from amrsmith.utils.errors import AlignmentMismatchError, AmrSyntaxError
from amrsmith.utils.logging import CONTEXT_BLOCK_INDEX, CONTEXT_ERROR_CODE, log_performance
from amrsmith.utils.parallel import ordered_map

logger = logging.getLogger(__name__)


def _parse_block(block: RawBlock) -> ParseResult:
    try:
        return ParseResult(block.amr_text, block.parse())
    except AmrSyntaxError as e:
        logger.debug(
            f"Block {block.index} is not a valid AMR: {e.message}",
            extra={CONTEXT_BLOCK_INDEX: block.index, CONTEXT_ERROR_CODE: e.code},
        )
        return ParseResult(block.amr_text, error=e)


def build_candidates(
    camr_blocks: Sequence[RawBlock],
    jamr_blocks: Sequence[RawBlock],
) -> List[SilverCandidate]:
    """Pair blocks by position; the sentence comes from CAMR's `::snt`, else JAMR's.

    Raises:
        AlignmentMismatchError: The files hold different numbers of blocks
    """
    if len(camr_blocks) != len(jamr_blocks):
        raise AlignmentMismatchError(
            f"Parser outputs disagree on sentence count: {len(camr_blocks)} CAMR vs {len(jamr_blocks)} JAMR",
            code="silver_alignment_mismatch",
            details={"camr_count": len(camr_blocks), "jamr_count": len(jamr_blocks)},
        )
    candidates = []
    for index, (camr, jamr) in enumerate(zip(camr_blocks, jamr_blocks)):
        sentence = camr.metadata.get("snt") or jamr.metadata.get("snt", "")
        candidates.append(SilverCandidate(index, sentence, _parse_block(camr), _parse_block(jamr)))
    return candidates


def histogram_bin(score: float) -> int:
    return min(int(score // (100 / HISTOGRAM_BINS)), HISTOGRAM_BINS - 1)


def curate_candidates(
    candidates: Sequence[SilverCandidate],
    mix_spec: MixSpec,
    threshold: float = DEFAULT_THRESHOLD,
    inclusive: bool = False,
    restarts: int = DEFAULT_RESTARTS,
    jobs: int = 1,
    progress: bool = False,
) -> CurationResult:
    """validity → agreement → mix over already-paired candidates.

    Args:
        candidates: Position-aligned parse pairs
        mix_spec: Sample size, CAMR share and seed; the seed also drives SMATCH
        threshold: Agreement F (0–100) a candidate must exceed
        inclusive: Keep agreement equal to the threshold too
        restarts: SMATCH restarts for agreement
        jobs: Worker processes for agreement scoring
        progress: Show a progress bar on stderr
    """
    report = CurationReport(total=len(candidates), threshold=threshold, inclusive=inclusive)
    if not candidates:
        logger.info("No silver candidates; writing an empty corpus")
        return CurationResult([], report)

    valid: List[SilverCandidate] = []
    for candidate in candidates:
        decision = validity_filter(candidate)
        if decision.keep:
            valid.append(candidate)
        else:
            report.dropped[decision.reason.value] += 1

    start = time.perf_counter()
    scored = ordered_map(
        partial(with_agreement, restarts=restarts, seed=mix_spec.seed),
        valid,
        jobs=jobs,
        progress=progress,
        desc="agreement",
    )
    log_performance(logger, "silver_agreement", int((time.perf_counter() - start) * 1000), pairs=len(scored))

    kept: List[SilverCandidate] = []
    for candidate in scored:
        report.histogram[histogram_bin(candidate.agreement)] += 1
        if agreement_filter(candidate, threshold, inclusive).keep:
            kept.append(candidate)
        else:
            report.dropped[DropReason.LOW_AGREEMENT.value] += 1
    report.kept = len(kept)

    logger.info(
        f"Kept {len(kept)} of {len(candidates)} silver candidates",
        extra={"kept": len(kept), "total": len(candidates), "dropped": dict(report.dropped)},
    )

    records = mix(kept, mix_spec)
    for record in records:
        report.mixed[record.source.value] += 1
    return CurationResult(records, report)


def curate(
    camr_file: Union[str, Path],
    jamr_file: Union[str, Path],
    mix_spec: MixSpec,
    threshold: float = DEFAULT_THRESHOLD,
    inclusive: bool = False,
    restarts: int = DEFAULT_RESTARTS,
    jobs: int = 1,
    progress: bool = False,
) -> CurationResult:
    """Curate a silver corpus from two position-aligned parser output files.

    Raises:
        AlignmentMismatchError: The files hold different numbers of blocks
        InsufficientCandidatesError: Fewer kept candidates than mix_spec.total
    """
    candidates = build_candidates(load_blocks(camr_file), load_blocks(jamr_file))
    return curate_candidates(candidates, mix_spec, threshold, inclusive, restarts, jobs, progress)


def record_graphs(records: Iterable[MixedRecord]):
    for record in records:
        metadata = dict(record.graph.metadata)
        metadata["snt"] = record.sentence
        metadata["source"] = record.source.value
        yield record.graph.with_metadata(metadata)


def write_silver_corpus(records: Sequence[MixedRecord], path: Union[str, Path]) -> int:
    """Write mixed records with `::snt` and `::source` metadata."""
    with open(path, "w", encoding="utf-8") as f:
        return write_corpus(record_graphs(records), f)


def write_report(report: CurationReport, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(report.to_dict(), f, indent=2)
        f.write("\n")
