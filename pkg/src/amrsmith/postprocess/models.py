"""Postprocessing models: options, per-stage change log and results."""

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import List, Optional

from amrsmith.amr.models import AmrGraph

FALLBACK_CONCEPT = "amr-empty"


class PruneMethod(IntEnum):
    """Duplicate-leaf pruning strategies.

    NONE keeps everything; ALL_REPEATS drops every repeat of a leaf;
    SAME_PARENT drops a repeat under a parent that already has it;
    FREQUENT drops the third and later occurrences; COMBINED applies
    SAME_PARENT and FREQUENT together.
    """
    NONE = 0
    ALL_REPEATS = 1
    SAME_PARENT = 2
    FREQUENT = 3
    COMBINED = 4


DEFAULT_PRUNE_METHOD = PruneMethod.COMBINED


class Stage(str, Enum):
    REPAIR = "repair"
    PRUNE = "prune"
    RESTORE = "restore"
    COREF = "coref"
    WIKIFY = "wikify"
    FALLBACK = "fallback"


@dataclass(frozen=True)
class LeafNode:
    """A childless concept node as seen by pruning.

    Attributes:
        relation: Incoming relation, colon included
        concept: Concept label
        parent: Path of the parent node
        path: Path of the node itself
        occurrence: 1-based count of this (relation, concept) so far, pre-order
    """
    relation: str
    concept: str
    parent: str
    path: str
    occurrence: int

    @property
    def key(self):
        return self.relation, self.concept


@dataclass(frozen=True)
class LogEntry:
    """One change made to one line; written as a TSV row."""
    line_index: int
    stage: Stage
    action: str
    detail: str = ""

    def to_row(self) -> str:
        detail = self.detail.replace("\t", " ").replace("\n", " ")
        return f"{self.line_index}\t{self.stage.value}\t{self.action}\t{detail}"


@dataclass(frozen=True)
class PostprocessOptions:
    prune: PruneMethod = DEFAULT_PRUNE_METHOD
    coref: bool = True
    wikify: bool = True


@dataclass
class PipelineResult:
    graph: AmrGraph
    log: List[LogEntry] = field(default_factory=list)
    repaired_text: Optional[str] = None

    def entries(self, stage: Stage) -> List[LogEntry]:
        return [entry for entry in self.log if entry.stage is stage]

    @property
    def pruned_nodes(self) -> int:
        return len(self.entries(Stage.PRUNE))


def fallback_graph() -> AmrGraph:
    return AmrGraph(top="a", instances={"a": FALLBACK_CONCEPT})
