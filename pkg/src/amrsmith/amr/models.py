"""AMR graph data models."""

import re
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from amrsmith.utils.errors import InvalidGraphError

# Bare tokens that are always constants, whatever variables are in scope
SYMBOL_CONSTANTS = frozenset({"-", "+", "imperative", "expressive", "interrogative"})
NUMBER_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
# Shape of variable names; bare tokens of this shape must resolve to a variable
VARIABLE_SHAPE_RE = re.compile(r"[a-z][0-9]*")


class ConstKind(str, Enum):
    """Kind of a constant attribute value."""
    QUOTED = "quoted-string"
    NUMBER = "number"
    SYMBOL = "symbol"


def classify_constant(token: str) -> Optional[ConstKind]:
    """Constant kind of a bare surface token, or None if it may name a node."""
    if len(token) >= 2 and token.startswith('"') and token.endswith('"'):
        return ConstKind.QUOTED
    if NUMBER_RE.fullmatch(token):
        return ConstKind.NUMBER
    if token in SYMBOL_CONSTANTS:
        return ConstKind.SYMBOL
    return None


@dataclass(frozen=True)
class Var:
    """Reference to a node by variable id."""
    id: str


@dataclass(frozen=True)
class Const:
    """Constant attribute value.

    Quoted strings keep their surface text without the surrounding quotes.
    """
    literal: str
    kind: ConstKind = ConstKind.SYMBOL


NodeRef = Union[Var, Const]


@dataclass(frozen=True)
class Edge:
    """Outgoing edge of a node.

    inline marks the edge at which the target node's subtree is written in
    the surface text; other edges to the same variable are bare references.
    """
    source: str
    relation: str
    target: NodeRef
    inline: bool = False

    @property
    def label(self) -> str:
        """Relation label without the leading colon."""
        return self.relation[1:]

    @property
    def is_attribute(self) -> bool:
        return isinstance(self.target, Const)


@dataclass(frozen=True)
class InlineAlignments:
    """Token indices attached to concepts and constants by `~e.N` markers.

    Attributes:
        concepts: variable id → aligned token indices of its concept
        constants: edge index → aligned token indices of the constant value
    """
    concepts: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    constants: Dict[int, Tuple[int, ...]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.concepts or self.constants)


@dataclass(frozen=True)
class AmrGraph:
    """Rooted, directed, variable-labeled AMR graph.

    Attributes:
        top: Variable id of the root
        instances: variable id → concept, in definition order
        edges: Outgoing edges in surface (depth-first) order
        metadata: `# ::key value` metadata, keys verbatim
        alignments: Inline `~e.N` alignments captured by the parser

    Graphs compare equal when top, instances and edges are equal; metadata
    and alignments do not take part in equality.
    """
    top: str
    instances: Dict[str, str]
    edges: Tuple[Edge, ...] = ()
    metadata: Dict[str, str] = field(default_factory=dict, compare=False)
    alignments: InlineAlignments = field(default_factory=InlineAlignments, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "instances", dict(self.instances))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "metadata", dict(self.metadata))
        self._validate()

    def _validate(self) -> None:
        if self.top not in self.instances:
            raise InvalidGraphError(
                f"Top variable {self.top!r} has no concept",
                code="amr_invalid_graph",
                details={"variable": self.top},
            )
        for index, edge in enumerate(self.edges):
            if edge.source not in self.instances:
                raise InvalidGraphError(
                    f"Edge source {edge.source!r} has no concept",
                    code="amr_invalid_graph",
                    details={"edge_index": index, "variable": edge.source},
                )
            if isinstance(edge.target, Var) and edge.target.id not in self.instances:
                raise InvalidGraphError(
                    f"Edge target {edge.target.id!r} has no concept",
                    code="amr_invalid_graph",
                    details={"edge_index": index, "variable": edge.target.id},
                )
            if len(edge.relation) < 2 or not edge.relation.startswith(":"):
                raise InvalidGraphError(
                    f"Relation label {edge.relation!r} must start with ':'",
                    code="amr_invalid_graph",
                    details={"edge_index": index, "relation": edge.relation},
                )

    def concept(self, variable: str) -> str:
        return self.instances[variable]

    @property
    def variables(self) -> List[str]:
        return list(self.instances)

    @cached_property
    def _outgoing(self) -> Dict[str, List[Edge]]:
        index: Dict[str, List[Edge]] = {v: [] for v in self.instances}
        for edge in self.edges:
            index[edge.source].append(edge)
        return index

    def outgoing(self, variable: str) -> List[Edge]:
        """Outgoing edges of a variable in surface order."""
        return self._outgoing[variable]

    def in_degree(self) -> Counter:
        """Number of incoming node edges per variable."""
        return Counter(e.target.id for e in self.edges if isinstance(e.target, Var))

    def reentrancies(self) -> List[str]:
        """Variables referenced by more than one edge."""
        degree = self.in_degree()
        return [v for v in self.instances if degree[v] > 1]

    def with_edges(self, edges: Iterable[Edge]) -> "AmrGraph":
        return replace(self, edges=tuple(edges))

    def with_metadata(self, metadata: Mapping[str, str]) -> "AmrGraph":
        return replace(self, metadata=dict(metadata))

    def __len__(self) -> int:
        return len(self.instances)
