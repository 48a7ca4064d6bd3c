"""Parser for PENMAN-notation AMR text with `# ::` metadata."""

import logging
import re
from typing import Dict, List, Optional, Tuple, Union

from amrsmith.amr.lexer import Token, TokenKind, tokenize_amr
from amrsmith.amr.models import (
    VARIABLE_SHAPE_RE,
    AmrGraph,
    Const,
    ConstKind,
    Edge,
    InlineAlignments,
    Var,
    classify_constant,
)
from amrsmith.utils.errors import (
    AmrSyntaxError,
    DanglingRelationError,
    DuplicateVariableDefinitionError,
    MissingConceptError,
    UnbalancedParensError,
    UndefinedVariableReferenceError,
)

logger = logging.getLogger(__name__)

_METADATA_KEY_RE = re.compile(r"(?:^|\s)::(\S+)")


def parse_metadata(lines: List[str]) -> Dict[str, str]:
    """Parse `# ::key value` comment lines.

    One line may carry several `::key value` pairs. Comment lines without
    `::` are ignored.
    """
    metadata: Dict[str, str] = {}
    for line in lines:
        body = line.lstrip()[1:].strip()
        matches = list(_METADATA_KEY_RE.finditer(body))
        for i, match in enumerate(matches):
            end = matches[i + 1].start() if i + 1 < len(matches) else len(body)
            metadata[match.group(1)] = body[match.end():end].strip()
    return metadata


def split_block(text: str) -> Tuple[List[str], str, int]:
    """Separate leading comment lines from the AMR body.

    Returns:
        (comment lines, body text, 1-based line number where the body starts)
    """
    lines = [line.rstrip("\r") for line in text.split("\n")]
    comments = []
    index = 0
    while index < len(lines) and (not lines[index].strip() or lines[index].lstrip().startswith("#")):
        if lines[index].strip():
            comments.append(lines[index])
        index += 1
    return comments, "\n".join(lines[index:]), index + 1


class _Pending:
    """Bare symbol value whose Var/Const status is decided after the full parse."""

    __slots__ = ("token",)

    def __init__(self, token: Token):
        self.token = token


class _Parser:
    def __init__(self, tokens: List[Token], end: Tuple[int, int]):
        self.tokens = tokens
        self.pos = 0
        self.end = end
        self.instances: Dict[str, str] = {}
        self.edges: List[Union[Edge, Tuple[str, str, _Pending], None]] = []
        self.concept_alignments: Dict[str, Tuple[int, ...]] = {}
        self.constant_alignments: Dict[int, Tuple[int, ...]] = {}

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> str:
        first = self.peek()
        if first is None:
            raise AmrSyntaxError("Empty AMR", *self.end, code="amr_empty")
        if first.kind is TokenKind.RPAREN:
            raise UnbalancedParensError("Unexpected ')'", first.line, first.column)
        if first.kind is not TokenKind.LPAREN:
            raise AmrSyntaxError(f"Expected '(' but found {first.text!r}", first.line, first.column)
        top = self.node()
        trailing = self.peek()
        if trailing is not None:
            if trailing.kind is TokenKind.RPAREN:
                raise UnbalancedParensError("Unexpected ')'", trailing.line, trailing.column)
            raise AmrSyntaxError(
                f"Unexpected {trailing.text!r} after the root node",
                trailing.line,
                trailing.column,
                code="amr_trailing_content",
            )
        return top

    def node(self) -> str:
        opening = self.next()
        var_token = self.peek()
        if var_token is None:
            raise UnbalancedParensError("Unclosed '('", opening.line, opening.column)
        if var_token.kind is not TokenKind.SYMBOL:
            raise MissingConceptError(
                f"Expected a variable but found {var_token.text!r}", var_token.line, var_token.column
            )
        self.next()
        variable = var_token.text
        slash = self.peek()
        if slash is None or slash.kind is not TokenKind.SLASH:
            raise MissingConceptError(
                f"Variable {variable!r} has no concept", var_token.line, var_token.column
            )
        self.next()
        concept_token = self.peek()
        if concept_token is None or concept_token.kind not in (TokenKind.SYMBOL, TokenKind.STRING):
            raise MissingConceptError(
                f"Variable {variable!r} has no concept", slash.line, slash.column
            )
        self.next()
        if variable in self.instances:
            raise DuplicateVariableDefinitionError(
                f"Variable {variable!r} is defined twice",
                var_token.line,
                var_token.column,
                details={"variable": variable},
            )
        self.instances[variable] = concept_token.text
        if concept_token.alignment:
            self.concept_alignments[variable] = concept_token.alignment

        while True:
            token = self.peek()
            if token is None:
                raise UnbalancedParensError("Unclosed '('", opening.line, opening.column)
            if token.kind is TokenKind.RPAREN:
                self.next()
                return variable
            if token.kind is not TokenKind.ROLE:
                raise AmrSyntaxError(
                    f"Expected a relation but found {token.text!r}", token.line, token.column
                )
            self.next()
            self.relation_value(variable, token)

    def relation_value(self, source: str, role: Token) -> None:
        value = self.peek()
        if value is None or value.kind in (TokenKind.RPAREN, TokenKind.ROLE):
            raise DanglingRelationError(
                f"Relation {role.text} has no value",
                role.line,
                role.column,
                details={"relation": role.text},
            )
        if value.kind is TokenKind.LPAREN:
            slot = len(self.edges)
            self.edges.append(None)
            target = self.node()
            self.edges[slot] = Edge(source, role.text, Var(target), inline=True)
        elif value.kind is TokenKind.STRING:
            self.next()
            if value.alignment:
                self.constant_alignments[len(self.edges)] = value.alignment
            self.edges.append(Edge(source, role.text, Const(value.text[1:-1], ConstKind.QUOTED)))
        elif value.kind is TokenKind.SYMBOL:
            self.next()
            if value.alignment:
                self.constant_alignments[len(self.edges)] = value.alignment
            self.edges.append((source, role.text, _Pending(value)))
        else:
            raise AmrSyntaxError(f"Unexpected {value.text!r}", value.line, value.column)

    def resolve(self) -> List[Edge]:
        """Turn bare symbols into variable references or constants."""
        edges = []
        for index, item in enumerate(self.edges):
            if isinstance(item, Edge):
                edges.append(item)
                continue
            source, relation, pending = item
            token = pending.token
            kind = classify_constant(token.text)
            if kind is not None:
                edges.append(Edge(source, relation, Const(token.text, kind)))
            elif token.text in self.instances:
                self.constant_alignments.pop(index, None)
                edges.append(Edge(source, relation, Var(token.text)))
            elif VARIABLE_SHAPE_RE.fullmatch(token.text):
                raise UndefinedVariableReferenceError(
                    f"Variable {token.text!r} is never defined",
                    token.line,
                    token.column,
                    details={"variable": token.text},
                )
            else:
                edges.append(Edge(source, relation, Const(token.text, ConstKind.SYMBOL)))
        return edges


def parse_amr(text: str) -> AmrGraph:
    """Parse one AMR, optionally preceded by `# ::key value` lines.

    Bare values resolve as constants (numbers, `-`, `+`, `imperative`,
    `expressive`, `interrogative`), as references to variables defined anywhere
    in the graph, or as symbol constants. Tokens shaped like variables
    (`x`, `p2`) that name no variable are rejected.

    Raises:
        AmrSyntaxError: Or one of its subclasses, with 1-based line/column
    """
    comments, body, first_line = split_block(text)
    tokens = tokenize_amr(body, first_line)
    last_line = first_line + body.count("\n")
    parser = _Parser(tokens, (last_line, len(body.rsplit("\n", 1)[-1]) + 1))
    top = parser.parse()
    edges = parser.resolve()
    return AmrGraph(
        top=top,
        instances=parser.instances,
        edges=tuple(edges),
        metadata=parse_metadata(comments),
        alignments=InlineAlignments(parser.concept_alignments, parser.constant_alignments),
    )
