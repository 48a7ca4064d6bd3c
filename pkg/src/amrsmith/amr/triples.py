"""Instance / attribute / relation triple view of an AMR graph."""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Tuple

from amrsmith.amr.models import AmrGraph, Const

TOP_LABEL = "TOP"
INSTANCE_LABEL = "instance"

# Relations whose name merely ends in -of; they are not inverses
NON_INVERSE_OF = frozenset({"consist-of", "prep-out-of", "prep-on-behalf-of"})


class TripleKind(str, Enum):
    INSTANCE = "instance"
    ATTRIBUTE = "attribute"
    RELATION = "relation"


@dataclass(frozen=True)
class Triple:
    """(label, arg1, arg2) with its kind; arg2 is a variable id for relations."""
    kind: TripleKind
    label: str
    arg1: str
    arg2: str

    @property
    def is_top(self) -> bool:
        return self.kind is TripleKind.ATTRIBUTE and self.label == TOP_LABEL

    def __str__(self) -> str:
        return f"({self.label}, {self.arg1}, {self.arg2})"


@dataclass(frozen=True)
class TripleSet:
    """Multiset of triples produced from one graph."""
    triples: Tuple[Triple, ...]

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def __len__(self) -> int:
        return len(self.triples)

    def of_kind(self, kind: TripleKind) -> List[Triple]:
        return [t for t in self.triples if t.kind is kind]

    @property
    def instances(self) -> List[Triple]:
        return self.of_kind(TripleKind.INSTANCE)

    @property
    def attributes(self) -> List[Triple]:
        """Attribute triples, TOP included."""
        return self.of_kind(TripleKind.ATTRIBUTE)

    @property
    def relations(self) -> List[Triple]:
        return self.of_kind(TripleKind.RELATION)

    @property
    def top(self) -> Triple:
        return next(t for t in self.triples if t.is_top)

    def counts(self) -> Dict[TripleKind, int]:
        counter = Counter(t.kind for t in self.triples)
        return {kind: counter.get(kind, 0) for kind in TripleKind}

    def multiset(self) -> Counter:
        return Counter(self.triples)


def invert_relation(label: str) -> Tuple[str, bool]:
    """Canonical label of a possibly inverse relation and whether it was inverted."""
    if label.endswith("-of") and label not in NON_INVERSE_OF and len(label) > 3:
        return label[:-3], True
    return label, False


def to_triples(graph: AmrGraph, normalize_inverse: bool = True) -> TripleSet:
    """Convert a graph to its triple set.

    One instance triple per variable, one TOP attribute triple whose value is
    the top concept, one relation triple per node edge and one attribute
    triple per constant edge (quotes stripped). With normalize_inverse,
    `X :rel-of Y` becomes the relation triple (rel, Y, X).
    """
    triples: List[Triple] = [
        Triple(TripleKind.INSTANCE, INSTANCE_LABEL, variable, concept)
        for variable, concept in graph.instances.items()
    ]
    triples.append(Triple(TripleKind.ATTRIBUTE, TOP_LABEL, graph.top, graph.concept(graph.top)))
    for edge in graph.edges:
        if isinstance(edge.target, Const):
            triples.append(Triple(TripleKind.ATTRIBUTE, edge.label, edge.source, edge.target.literal))
            continue
        label, inverted = invert_relation(edge.label) if normalize_inverse else (edge.label, False)
        if inverted:
            triples.append(Triple(TripleKind.RELATION, label, edge.target.id, edge.source))
        else:
            triples.append(Triple(TripleKind.RELATION, label, edge.source, edge.target.id))
    return TripleSet(tuple(triples))
