"""Data models for the variable-free training form."""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

from amrsmith.amr.models import ConstKind
from amrsmith.utils.errors import TagMismatchError


class NodeKind(str, Enum):
    """Kind of a variable-free tree node; constants are always leaves."""
    CONCEPT = "concept"
    QUOTED = "quoted-string"
    NUMBER = "number"
    SYMBOL = "symbol"

    @classmethod
    def from_constant(cls, kind: ConstKind) -> "NodeKind":
        return cls(kind.value)

    @property
    def constant_kind(self) -> Optional[ConstKind]:
        return None if self is NodeKind.CONCEPT else ConstKind(self.value)


ROOT_PATH = "0"


def child_path(parent: str, index: int) -> str:
    return f"{parent}.{index}"


@dataclass(frozen=True)
class VariableFreeTree:
    """Ordered concept tree without variables.

    Attributes:
        concept: Concept label, or the constant's text for constant leaves
            (quoted strings without their quotes)
        children: (relation, subtree) pairs in surface order; relations keep
            their leading colon
        kind: CONCEPT for `(concept …)` nodes, a constant kind for bare values
    """
    concept: str
    children: Tuple[Tuple[str, "VariableFreeTree"], ...] = ()
    kind: NodeKind = NodeKind.CONCEPT

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    @property
    def is_constant(self) -> bool:
        return self.kind is not NodeKind.CONCEPT

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def with_children(self, children) -> "VariableFreeTree":
        return replace(self, children=tuple(children))

    def node_at(self, path: str) -> "VariableFreeTree":
        """Subtree at a dot-separated path, `0` being this node.

        Raises:
            KeyError: The path does not resolve
        """
        parts = path.split(".")
        if parts[0] != ROOT_PATH:
            raise KeyError(path)
        node = self
        for part in parts[1:]:
            if not part.isdigit() or int(part) >= len(node.children):
                raise KeyError(path)
            node = node.children[int(part)][1]
        return node

    def walk(self, path: str = ROOT_PATH) -> Iterator[Tuple[str, Optional[str], "VariableFreeTree"]]:
        """Pre-order (path, incoming relation, node) triples."""
        stack: List[Tuple[str, Optional[str], VariableFreeTree]] = [(path, None, self)]
        while stack:
            current, relation, node = stack.pop()
            yield current, relation, node
            for index in range(len(node.children) - 1, -1, -1):
                rel, child = node.children[index]
                stack.append((child_path(current, index), rel, child))

    def size(self) -> int:
        return sum(1 for _ in self.walk())


@dataclass(frozen=True)
class AlignmentEntry:
    """Token span [start, end) aligned to the node at path."""
    start: int
    end: int
    path: str

    @property
    def tokens(self) -> range:
        return range(self.start, self.end)


@dataclass(frozen=True)
class Alignment:
    """Sentence-token to tree-node alignment, entries in input order."""
    entries: Tuple[AlignmentEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def first_token_by_path(self) -> Dict[str, int]:
        """Smallest aligned token index per node path."""
        first: Dict[str, int] = {}
        for entry in self.entries:
            if entry.path not in first or entry.start < first[entry.path]:
                first[entry.path] = entry.start
        return first

    def extended(self, entries) -> "Alignment":
        return Alignment(self.entries + tuple(entries))


@dataclass(frozen=True)
class SentenceRecord:
    """A sentence before and after cleaning.

    tags, when present, has one POS tag per token; an empty string means the
    token carries no tag.
    """
    raw: str
    cleaned: str
    tokens: Tuple[str, ...] = ()
    tags: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if self.tags is not None:
            object.__setattr__(self, "tags", tuple(self.tags))
            if len(self.tags) != len(self.tokens):
                raise TagMismatchError(
                    f"{len(self.tags)} tags for {len(self.tokens)} tokens",
                    code="tokenize_tag_mismatch",
                    details={"sentence": self.cleaned},
                )

    def with_tags(self, tags) -> "SentenceRecord":
        return replace(self, tags=tuple(tags))


@dataclass(frozen=True)
class TrainingPair:
    """One preprocessed training example."""
    sentence: SentenceRecord
    tree: VariableFreeTree
    alignment: Alignment = field(default_factory=Alignment)
    source_index: int = 0
