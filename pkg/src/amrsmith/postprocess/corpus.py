"""Postprocessing a whole model output file."""

import asyncio
import logging
from dataclasses import replace
from functools import partial
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from amrsmith.postprocess.entity_linker import HttpEntityLinker
from amrsmith.postprocess.models import LogEntry, PipelineResult, PostprocessOptions, Stage, fallback_graph
from amrsmith.postprocess.pipeline import pipeline
from amrsmith.postprocess.wikify import WikiBackend, named_entities, wikify_with_links
from amrsmith.utils.logging import CONTEXT_LINE_INDEX, CONTEXT_STAGE
from amrsmith.utils.parallel import ordered_map

logger = logging.getLogger(__name__)


def _run_line(item: Tuple[int, str], options: PostprocessOptions) -> PipelineResult:
    index, line = item
    return pipeline(line, options, line_index=index)


def postprocess_lines(
    lines: Sequence[str],
    options: Optional[PostprocessOptions] = None,
    backend: Optional[WikiBackend] = None,
    jobs: int = 1,
    progress: bool = False,
) -> List[PipelineResult]:
    """Run the pipeline on every line, results in input order.

    Structural stages run in parallel without the backend; wikification
    follows in this process so an HTTP backend can resolve every name in
    one concurrent prefetch first.
    """
    options = options or PostprocessOptions()
    structural = replace(options, wikify=False)
    results = ordered_map(
        partial(_run_line, options=structural),
        list(enumerate(lines)),
        jobs=jobs,
        progress=progress,
        desc="postprocess",
    )
    if not options.wikify or backend is None:
        return results

    if isinstance(backend, HttpEntityLinker):
        names = [name for result in results for _, name in named_entities(result.graph)]
        hits = asyncio.run(backend.prefetch(names))
        logger.info(f"Entity linker resolved {hits} names", extra={"tool": "wiki_http"})

    for index, result in enumerate(results):
        if any(entry.stage is Stage.FALLBACK for entry in result.log):
            continue
        try:
            graph, links = wikify_with_links(result.graph, backend)
        except Exception as e:
            logger.error(
                f"Line {index} failed in wikify, using fallback: {e}",
                extra={CONTEXT_LINE_INDEX: index, CONTEXT_STAGE: Stage.WIKIFY.value},
                exc_info=True,
            )
            result.graph = fallback_graph()
            result.log.append(LogEntry(index, Stage.FALLBACK, "fallback", f"wikify: {e}"))
            continue
        result.graph = graph
        result.log.extend(
            LogEntry(index, Stage.WIKIFY, "linked", f"{variable} {name} -> {title}")
            for variable, name, title in links
        )
    return results


def summarize(results: Sequence[PipelineResult]) -> dict:
    """Corpus-level counts of what each stage changed."""
    return {
        "lines": len(results),
        "repaired": sum(1 for r in results if r.entries(Stage.REPAIR)),
        "nodes_pruned": sum(r.pruned_nodes for r in results),
        "amrs_pruned": sum(1 for r in results if r.pruned_nodes),
        "coref_merges": sum(len(r.entries(Stage.COREF)) for r in results),
        "wiki_links": sum(len(r.entries(Stage.WIKIFY)) for r in results),
        "fallbacks": sum(1 for r in results if r.entries(Stage.FALLBACK)),
    }


def write_log(results: Sequence[PipelineResult], path: Union[str, Path]) -> int:
    """TSV log: line-index, stage, action, detail; returns the row count."""
    rows = [entry.to_row() for result in results for entry in result.log]
    with open(path, "w", encoding="utf-8") as f:
        f.writelines(row + "\n" for row in rows)
    return len(rows)
