"""Full postprocessing of one model output line."""

import logging
from typing import List, Optional, Union

from amrsmith.postprocess.models import (
    LogEntry,
    PipelineResult,
    PostprocessOptions,
    PruneMethod,
    Stage,
    fallback_graph,
)
from amrsmith.postprocess.prune import prune_with_removed
from amrsmith.postprocess.repair import repair_with_actions
from amrsmith.postprocess.restore import restore_coreference_with_merges, restore_variables
from amrsmith.postprocess.wikify import WikiBackend, wikify_with_links
from amrsmith.preprocess.linearize import serialize_tree
from amrsmith.utils.logging import CONTEXT_LINE_INDEX, CONTEXT_STAGE

logger = logging.getLogger(__name__)


def pipeline(
    raw: Union[str, bytes],
    options: Optional[PostprocessOptions] = None,
    backend: Optional[WikiBackend] = None,
    line_index: int = 0,
) -> PipelineResult:
    """repair → prune → restore variables → restore co-reference → wikify.

    Never raises: an unexpected failure in any stage yields `(a / amr-empty)`
    with a fallback log entry.

    Args:
        raw: One model output line
        options: Stage switches; pruning defaults to the combined method
        backend: Wiki lookup; wikification is skipped without one
        line_index: Index used in log entries
    """
    options = options or PostprocessOptions()
    log: List[LogEntry] = []
    stage = Stage.REPAIR
    try:
        tree, actions = repair_with_actions(raw)
        log.extend(LogEntry(line_index, Stage.REPAIR, action) for action in actions)
        repaired_text = serialize_tree(tree)

        stage = Stage.PRUNE
        if options.prune is not PruneMethod.NONE:
            tree, removed = prune_with_removed(tree, options.prune)
            log.extend(
                LogEntry(line_index, Stage.PRUNE, "removed", f"{leaf.relation} ({leaf.concept}) at {leaf.path}")
                for leaf in removed
            )

        stage = Stage.RESTORE
        graph = restore_variables(tree)

        if options.coref:
            stage = Stage.COREF
            graph, merges = restore_coreference_with_merges(graph)
            log.extend(
                LogEntry(line_index, Stage.COREF, "merged", f"{removed} -> {kept}")
                for removed, kept in merges
            )

        if options.wikify and backend is not None:
            stage = Stage.WIKIFY
            graph, links = wikify_with_links(graph, backend)
            log.extend(
                LogEntry(line_index, Stage.WIKIFY, "linked", f"{variable} {name} -> {title}")
                for variable, name, title in links
            )
        return PipelineResult(graph, log, repaired_text)
    except Exception as e:
        logger.error(
            f"Line {line_index} failed in {stage.value}, using fallback: {e}",
            extra={CONTEXT_LINE_INDEX: line_index, CONTEXT_STAGE: stage.value},
            exc_info=True,
        )
        log.append(LogEntry(line_index, Stage.FALLBACK, "fallback", f"{stage.value}: {e}"))
        return PipelineResult(fallback_graph(), log)
