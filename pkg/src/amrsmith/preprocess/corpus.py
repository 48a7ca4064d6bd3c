"""Corpus-level preprocessing: gold graphs to line-aligned training files."""

import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import IO, List, Optional, Sequence, Union

from amrsmith.amr.models import AmrGraph
from amrsmith.preprocess.alignments import (
    AlignmentFormat,
    alignment_from_metadata,
    remap_without_relation,
    validate_alignment,
)
from amrsmith.preprocess.cleaning import clean_sentence
from amrsmith.preprocess.linearize import serialize_tree
from amrsmith.preprocess.models import Alignment, TrainingPair
from amrsmith.preprocess.reorder import (
    ConsistencyModel,
    ReorderMode,
    alpha_reordering,
    best_reordering_with_alignment,
)
from amrsmith.preprocess.variables import WIKI_RELATION, expand_graph, strip_tree_relation
from amrsmith.utils.errors import MalformedAlignmentError
from amrsmith.utils.logging import CONTEXT_BLOCK_INDEX, CONTEXT_ERROR_CODE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreprocessOptions:
    strip_wiki: bool = False
    reorder: ReorderMode = ReorderMode.NONE
    double: bool = False
    alignments_format: AlignmentFormat = AlignmentFormat.JAMR


def build_pair(
    graph: AmrGraph,
    index: int,
    options: PreprocessOptions,
    sidecar: Optional[Alignment] = None,
) -> TrainingPair:
    """Clean the sentence, expand the graph and attach its alignment.

    Alignments that do not resolve against the tree are dropped with a
    warning; the record is kept.
    """
    sentence = clean_sentence(graph.metadata.get("snt", ""))
    expansion = expand_graph(graph)
    for variable in expansion.cycles:
        logger.warning(
            f"Cyclic reference to {variable!r} cut at one level",
            extra={CONTEXT_BLOCK_INDEX: index, "variable": variable},
        )
    tree = expansion.tree
    try:
        alignment = alignment_from_metadata(graph, expansion, options.alignments_format, sidecar)
        validate_alignment(alignment, tree)
    except MalformedAlignmentError as e:
        logger.warning(
            f"Ignoring alignment of record {index}: {e.message}",
            extra={CONTEXT_BLOCK_INDEX: index, CONTEXT_ERROR_CODE: e.code},
        )
        alignment = Alignment()
    if options.strip_wiki:
        alignment = remap_without_relation(alignment, tree, WIKI_RELATION)
        tree = strip_tree_relation(tree, WIKI_RELATION)
    return TrainingPair(sentence, tree, alignment, index)


def _best(pair: TrainingPair) -> TrainingPair:
    tree, alignment = best_reordering_with_alignment(pair.tree, pair.alignment)
    return replace(pair, tree=tree, alignment=alignment)


def double_data(pairs: Sequence[TrainingPair]) -> List[TrainingPair]:
    """Originals followed by one best-reordered copy of every pair."""
    return list(pairs) + [_best(pair) for pair in pairs]


def reorder_pairs(pairs: Sequence[TrainingPair], mode: ReorderMode) -> List[TrainingPair]:
    mode = ReorderMode(mode)
    if mode is ReorderMode.NONE:
        return list(pairs)
    if mode is ReorderMode.BEST:
        return [_best(pair) for pair in pairs]
    if mode is ReorderMode.ALPHA:
        return [replace(pair, tree=alpha_reordering(pair.tree)) for pair in pairs]
    model = ConsistencyModel().fit(pair.tree for pair in pairs)
    return [replace(pair, tree=model.reorder(pair.tree)) for pair in pairs]


def preprocess_corpus(
    graphs: Sequence[AmrGraph],
    options: PreprocessOptions,
    sidecars: Optional[Sequence[Alignment]] = None,
) -> List[TrainingPair]:
    """Training pairs for a gold corpus.

    Without doubling the chosen ordering replaces the gold order. With
    doubling the originals are kept and the added copies use the ordering
    (best when none is chosen).
    """
    pairs = [
        build_pair(graph, i, options, sidecars[i] if sidecars and i < len(sidecars) else None)
        for i, graph in enumerate(graphs)
    ]
    if not options.double:
        return reorder_pairs(pairs, options.reorder)
    if options.reorder in (ReorderMode.NONE, ReorderMode.BEST):
        return double_data(pairs)
    return pairs + reorder_pairs(pairs, options.reorder)


def write_training_files(
    pairs: Sequence[TrainingPair],
    amr_out: Union[str, Path, IO[str]],
    snt_out: Union[str, Path, IO[str]],
) -> int:
    """One single-line tree per line and one cleaned sentence per line."""
    amr_lines = [serialize_tree(pair.tree) + "\n" for pair in pairs]
    snt_lines = [pair.sentence.cleaned + "\n" for pair in pairs]
    for target, lines in ((amr_out, amr_lines), (snt_out, snt_lines)):
        if isinstance(target, (str, Path)):
            with open(target, "w", encoding="utf-8") as f:
                f.writelines(lines)
        else:
            target.writelines(lines)
    return len(pairs)
