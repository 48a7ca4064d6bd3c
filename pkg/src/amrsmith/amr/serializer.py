"""PENMAN serialization of AmrGraph."""

import re
from enum import Enum
from typing import List, Set, Union

from amrsmith.amr.lexer import split_alignment
from amrsmith.amr.models import VARIABLE_SHAPE_RE, AmrGraph, Const, ConstKind, Var, classify_constant
from amrsmith.utils.errors import InvalidGraphError


class Layout(str, Enum):
    SINGLE_LINE = "single-line"
    INDENTED = "indented"


# Text that re-lexes as one bare symbol token
_BARE_SYMBOL_RE = re.compile(r'[^\s()"/:~][^\s()"/~]*')
_CONCEPT_RE = re.compile(r'"[^"]*"|[^\s()"/:][^\s()"/]*')
_RELATION_RE = re.compile(r':[^\s()"/:]+')


def format_constant(const: Const, graph: AmrGraph = None) -> str:
    """Surface text of a constant.

    Symbols that would re-read as something else (a variable reference, a
    number, several tokens) are written quoted.
    """
    literal = const.literal.replace('"', "'")
    if const.kind is ConstKind.QUOTED:
        return f'"{literal}"'
    if not _BARE_SYMBOL_RE.fullmatch(literal):
        return f'"{literal}"'
    if const.kind is ConstKind.SYMBOL:
        misread = (
            VARIABLE_SHAPE_RE.fullmatch(literal)
            or (graph is not None and literal in graph.instances)
            or classify_constant(literal) not in (None, ConstKind.SYMBOL)
        )
        if misread:
            return f'"{literal}"'
    return literal


def format_concept(concept: str) -> str:
    """Concept text, unchanged.

    Raises:
        InvalidGraphError: The concept would not re-read as one concept token
            (whitespace, parentheses, a stray quote, a trailing `~N` alignment)
    """
    if _CONCEPT_RE.fullmatch(concept) and (concept.startswith('"') or split_alignment(concept)[1] is None):
        return concept
    raise InvalidGraphError(
        f"Concept {concept!r} cannot be written",
        code="amr_unwritable_concept",
        details={"concept": concept},
    )


def format_relation(relation: str) -> str:
    if _RELATION_RE.fullmatch(relation) and split_alignment(relation)[1] is None:
        return relation
    raise InvalidGraphError(
        f"Relation {relation!r} cannot be written",
        code="amr_unwritable_relation",
        details={"relation": relation},
    )


def format_metadata(graph: AmrGraph) -> List[str]:
    return [f"# ::{key} {value}".rstrip() for key, value in graph.metadata.items()]


def serialize_amr(
    graph: AmrGraph,
    layout: Union[Layout, str] = Layout.INDENTED,
    include_metadata: bool = False,
    indent: int = 4,
) -> str:
    """Write a graph in PENMAN notation.

    Each variable's subtree is written at its inline edge; a variable with no
    inline edge is written at its first occurrence in depth-first order.

    Args:
        graph: Graph to serialize
        layout: "single-line" or "indented"
        include_metadata: Prefix the `# ::key value` lines
        indent: Spaces per nesting level in the indented layout
    """
    layout = Layout(layout)
    inline_targets: Set[str] = {
        e.target.id for e in graph.edges if e.inline and isinstance(e.target, Var)
    }
    written: Set[str] = set()
    parts: List[str] = []

    def write(variable: str, depth: int) -> None:
        written.add(variable)
        parts.append(f"({variable} / {format_concept(graph.concept(variable))}")
        for edge in graph.outgoing(variable):
            if layout is Layout.INDENTED:
                parts.append("\n" + " " * (indent * (depth + 1)))
            else:
                parts.append(" ")
            parts.append(f"{format_relation(edge.relation)} ")
            target = edge.target
            if isinstance(target, Const):
                parts.append(format_constant(target, graph))
            elif target.id not in written and (edge.inline or target.id not in inline_targets):
                write(target.id, depth + 1)
            else:
                parts.append(target.id)
        parts.append(")")

    write(graph.top, 0)
    text = "".join(parts)
    if include_metadata and graph.metadata:
        return "\n".join(format_metadata(graph) + [text])
    return text
