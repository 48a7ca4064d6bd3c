"""Parsing and adjusting sentence-to-node alignments.

Three sources are accepted: JAMR metadata (`3-5|0.1+0.1.0`, end-exclusive
spans), a TSV sidecar (`token<TAB>path` lines, blank line between records)
and ISI inline markers captured by the AMR parser. Paths address the
variable-free tree of the unstripped graph.
"""

import logging
import re
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Union

from amrsmith.amr.models import AmrGraph
from amrsmith.preprocess.models import ROOT_PATH, Alignment, AlignmentEntry, VariableFreeTree, child_path
from amrsmith.preprocess.variables import Expansion
from amrsmith.utils.errors import MalformedAlignmentError

logger = logging.getLogger(__name__)

_JAMR_ITEM_RE = re.compile(r"(\d+)-(\d+)\|(\d+(?:\.\d+)*(?:\+\d+(?:\.\d+)*)*)")
_PATH_RE = re.compile(r"\d+(?:\.\d+)*")


class AlignmentFormat(str, Enum):
    JAMR = "jamr"
    TSV = "tsv"
    ISI = "isi"


def _malformed(item: str, reason: str) -> MalformedAlignmentError:
    return MalformedAlignmentError(
        f"Malformed alignment entry {item!r}: {reason}",
        code="alignment_malformed_entry",
        details={"item": item},
    )


def parse_jamr(meta: str) -> Alignment:
    entries: List[AlignmentEntry] = []
    for item in meta.split():
        match = _JAMR_ITEM_RE.fullmatch(item)
        if not match:
            raise _malformed(item, "expected start-end|path(+path)*")
        start, end = int(match.group(1)), int(match.group(2))
        if end <= start:
            raise _malformed(item, "empty span")
        for path in match.group(3).split("+"):
            entries.append(AlignmentEntry(start, end, path))
    return Alignment(tuple(entries))


def parse_tsv(meta: str) -> Alignment:
    entries: List[AlignmentEntry] = []
    for line in meta.splitlines():
        if not line.strip():
            continue
        fields = line.strip().split("\t")
        if len(fields) != 2 or not fields[0].isdigit() or not _PATH_RE.fullmatch(fields[1]):
            raise _malformed(line, "expected tokenIndex<TAB>path")
        index = int(fields[0])
        entries.append(AlignmentEntry(index, index + 1, fields[1]))
    return Alignment(tuple(entries))


def parse_alignments(meta: str, format: Union[AlignmentFormat, str] = AlignmentFormat.JAMR) -> Alignment:
    """Parse alignment text; entries keep input order.

    Raises:
        MalformedAlignmentError: With the offending item in details
    """
    format = AlignmentFormat(format)
    if format is AlignmentFormat.JAMR:
        return parse_jamr(meta)
    if format is AlignmentFormat.TSV:
        return parse_tsv(meta)
    raise ValueError("ISI alignments are read from the graph, see from_inline")


def read_tsv_sidecar(path: Union[str, Path]) -> List[Alignment]:
    """One Alignment per blank-line separated record of a TSV sidecar."""
    records: List[Alignment] = []
    current: List[str] = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.strip():
                current.append(line.rstrip("\n"))
            elif current:
                records.append(parse_tsv("\n".join(current)))
                current = []
    if current:
        records.append(parse_tsv("\n".join(current)))
    return records


def from_inline(graph: AmrGraph, expansion: Expansion) -> Alignment:
    """Alignment built from `~e.N` markers kept on the graph."""
    entries: List[AlignmentEntry] = []
    for variable, tokens in graph.alignments.concepts.items():
        for path in expansion.variable_paths.get(variable, ()):
            entries.extend(AlignmentEntry(t, t + 1, path) for t in tokens)
    for edge_index, tokens in graph.alignments.constants.items():
        path = expansion.constant_paths.get(edge_index)
        if path is not None:
            entries.extend(AlignmentEntry(t, t + 1, path) for t in tokens)
    return Alignment(tuple(entries))


def inherit_copies(alignment: Alignment, expansion: Expansion) -> Alignment:
    """Give concept copies of re-entrant variables their variable's alignment."""
    copies: Dict[str, List[str]] = {
        paths[0]: paths[1:] for paths in expansion.variable_paths.values() if len(paths) > 1
    }
    present = {entry.path for entry in alignment}
    extra = [
        AlignmentEntry(entry.start, entry.end, copy)
        for entry in alignment
        for copy in copies.get(entry.path, ())
        if copy not in present
    ]
    return alignment.extended(extra) if extra else alignment


def validate_alignment(
    alignment: Alignment,
    tree: VariableFreeTree,
    sentence_length: Optional[int] = None,
) -> None:
    """Check that every path resolves and every span fits the sentence.

    Raises:
        MalformedAlignmentError: code alignment_unresolved_path
    """
    for entry in alignment:
        try:
            tree.node_at(entry.path)
        except KeyError:
            raise MalformedAlignmentError(
                f"Alignment path {entry.path} does not resolve",
                code="alignment_unresolved_path",
                details={"path": entry.path},
            ) from None
        if sentence_length is not None and entry.end > sentence_length:
            raise MalformedAlignmentError(
                f"Span {entry.start}-{entry.end} exceeds {sentence_length} tokens",
                code="alignment_malformed_entry",
                details={"item": f"{entry.start}-{entry.end}|{entry.path}"},
            )


def remap_without_relation(
    alignment: Alignment,
    tree: VariableFreeTree,
    relation: str,
) -> Alignment:
    """Rewrite paths for the tree with every `relation` child removed.

    Entries pointing into removed subtrees are dropped.
    """
    renamed: Dict[str, str] = {}

    def visit(node: VariableFreeTree, old: str, new: str) -> None:
        renamed[old] = new
        position = 0
        for index, (rel, child) in enumerate(node.children):
            if rel == relation:
                continue
            visit(child, child_path(old, index), child_path(new, position))
            position += 1

    visit(tree, ROOT_PATH, ROOT_PATH)
    return Alignment(tuple(
        AlignmentEntry(e.start, e.end, renamed[e.path])
        for e in alignment
        if e.path in renamed
    ))


def alignment_from_metadata(
    graph: AmrGraph,
    expansion: Expansion,
    format: Union[AlignmentFormat, str],
    sidecar: Optional[Alignment] = None,
) -> Alignment:
    """Alignment for one record in the chosen format, copies included.

    JAMR alignments are read from the `::alignments` metadata key; a missing
    key gives an empty alignment.
    """
    format = AlignmentFormat(format)
    if format is AlignmentFormat.ISI:
        return from_inline(graph, expansion)
    if format is AlignmentFormat.TSV:
        alignment = sidecar or Alignment()
    else:
        alignment = parse_jamr(graph.metadata.get("alignments", ""))
    return inherit_copies(alignment, expansion)

