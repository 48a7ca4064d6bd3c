"""Postprocess raw model output and score it against gold."""

import logging
import time
from pathlib import Path
from typing import List, Optional, Sequence, Union

from amrsmith.amr.corpus import load_corpus
from amrsmith.amr.models import AmrGraph
from amrsmith.eval.models import EvalOptions, EvalResult
from amrsmith.postprocess.corpus import postprocess_lines, summarize
from amrsmith.postprocess.wikify import WikiBackend
from amrsmith.smatch.metrics import corpus_breakdown
from amrsmith.smatch.scorer import corpus_smatch
from amrsmith.utils.errors import AlignmentMismatchError

logger = logging.getLogger(__name__)


def read_raw_lines(path: Union[str, Path]) -> List[str]:
    """One model output per line; empty lines are kept and fall back."""
    with open(path, encoding="utf-8") as f:
        return f.read().splitlines()


def evaluate(
    raw_lines: Sequence[str],
    golds: Sequence[AmrGraph],
    options: Optional[EvalOptions] = None,
    backend: Optional[WikiBackend] = None,
) -> EvalResult:
    """Run the postprocess pipeline on every line, then corpus SMATCH.

    Raises:
        AlignmentMismatchError: Line count differs from the gold record count
        EmptyCorpusError: No lines to score
    """
    options = options or EvalOptions()
    if len(raw_lines) != len(golds):
        raise AlignmentMismatchError(
            f"Raw output has {len(raw_lines)} lines but gold has {len(golds)} AMRs",
            code="eval_alignment_mismatch",
            details={"raw_count": len(raw_lines), "gold_count": len(golds)},
        )

    start = time.time()
    results = postprocess_lines(
        raw_lines,
        options.postprocess,
        backend=backend,
        jobs=options.jobs,
        progress=options.progress,
    )
    logger.info("Postprocessed raw output", extra={"stats": summarize(results)})

    preds = [result.graph for result in results]
    score = corpus_smatch(
        preds,
        golds,
        restarts=options.restarts,
        seed=options.seed,
        normalize_inverse=options.normalize_inverse,
        jobs=options.jobs,
        progress=options.progress,
    )
    breakdown = None
    if options.breakdown:
        breakdown = corpus_breakdown(
            preds,
            golds,
            restarts=options.restarts,
            seed=options.seed,
            normalize_inverse=options.normalize_inverse,
            jobs=options.jobs,
            progress=options.progress,
        )
    return EvalResult(results, score, breakdown, duration=time.time() - start)


def pipeline_eval(
    raw_file: Union[str, Path],
    gold_file: Union[str, Path],
    options: Optional[EvalOptions] = None,
    backend: Optional[WikiBackend] = None,
) -> EvalResult:
    """Score a raw model output file against a gold corpus file.

    Malformed gold blocks are skipped with a warning, which usually surfaces
    as an AlignmentMismatchError.
    """
    golds, errors = load_corpus(gold_file)
    for error in errors:
        logger.warning(f"Gold corpus: {error}", extra={"path": str(gold_file)})
    return evaluate(read_raw_lines(raw_file), golds, options, backend)
