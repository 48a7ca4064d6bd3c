"""Text form of variable-free trees: `(material :mod (raw) :domain (opium))`."""

import re
from typing import List, Optional, Union

from amrsmith.amr.lexer import Token, TokenKind, tokenize_amr
from amrsmith.amr.models import classify_constant
from amrsmith.amr.serializer import Layout
from amrsmith.preprocess.models import NodeKind, VariableFreeTree
from amrsmith.utils.errors import (
    AmrSyntaxError,
    DanglingRelationError,
    MissingConceptError,
    UnbalancedParensError,
)

_BARE_RE = re.compile(r'[^\s()"/:~][^\s()"/~]*')


def format_leaf(tree: VariableFreeTree) -> str:
    """Surface text of a constant leaf."""
    text = tree.concept.replace('"', "'")
    if tree.kind is NodeKind.QUOTED or not _BARE_RE.fullmatch(text):
        return f'"{text}"'
    return text


def serialize_tree(
    tree: VariableFreeTree,
    layout: Union[Layout, str] = Layout.SINGLE_LINE,
    indent: int = 4,
) -> str:
    """Write a variable-free tree.

    The single-line layout has no newlines and single spaces only.
    """
    layout = Layout(layout)
    parts: List[str] = []

    def write(node: VariableFreeTree, depth: int) -> None:
        if node.is_constant:
            parts.append(format_leaf(node))
            return
        parts.append(f"({node.concept}")
        for relation, child in node.children:
            if layout is Layout.INDENTED:
                parts.append("\n" + " " * (indent * (depth + 1)))
            else:
                parts.append(" ")
            parts.append(f"{relation} ")
            write(child, depth + 1)
        parts.append(")")

    write(tree, 0)
    return "".join(parts)


class _TreeParser:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def node(self, is_root: bool) -> VariableFreeTree:
        opening = self.tokens[self.pos]
        self.pos += 1
        concept = self.peek()
        if concept is None:
            raise UnbalancedParensError("Unclosed '('", opening.line, opening.column)
        if concept.kind not in (TokenKind.SYMBOL, TokenKind.STRING):
            raise MissingConceptError(
                f"Expected a concept but found {concept.text!r}", concept.line, concept.column
            )
        self.pos += 1
        children = []
        while True:
            token = self.peek()
            if token is None:
                raise UnbalancedParensError("Unclosed '('", opening.line, opening.column)
            if token.kind is TokenKind.RPAREN:
                self.pos += 1
                break
            if token.kind is not TokenKind.ROLE:
                raise AmrSyntaxError(
                    f"Expected a relation but found {token.text!r}", token.line, token.column
                )
            self.pos += 1
            children.append((token.text, self.value(token)))

        kind = classify_constant(concept.text)
        if not children and not is_root and kind is not None:
            return self.constant(concept)
        return VariableFreeTree(concept.text, tuple(children))

    def constant(self, token: Token) -> VariableFreeTree:
        kind = classify_constant(token.text)
        if token.kind is TokenKind.STRING:
            return VariableFreeTree(token.text[1:-1], (), NodeKind.QUOTED)
        if kind is None:
            return VariableFreeTree(token.text, (), NodeKind.SYMBOL)
        return VariableFreeTree(token.text, (), NodeKind.from_constant(kind))

    def value(self, role: Token) -> VariableFreeTree:
        token = self.peek()
        if token is None or token.kind in (TokenKind.RPAREN, TokenKind.ROLE):
            raise DanglingRelationError(f"Relation {role.text} has no value", role.line, role.column)
        if token.kind is TokenKind.LPAREN:
            return self.node(is_root=False)
        if token.kind in (TokenKind.SYMBOL, TokenKind.STRING):
            self.pos += 1
            return self.constant(token)
        raise AmrSyntaxError(f"Unexpected {token.text!r}", token.line, token.column)


def parse_tree(text: str) -> VariableFreeTree:
    """Parse the variable-free text form.

    A childless `(1)` or `(-)` below the root reads as a constant leaf.

    Raises:
        AmrSyntaxError: Or one of its subclasses, with 1-based line/column
    """
    tokens = tokenize_amr(text)
    if not tokens:
        raise AmrSyntaxError("Empty tree", 1, 1, code="amr_empty")
    first = tokens[0]
    if first.kind is not TokenKind.LPAREN:
        raise AmrSyntaxError(f"Expected '(' but found {first.text!r}", first.line, first.column)
    parser = _TreeParser(tokens)
    tree = parser.node(is_root=True)
    trailing = parser.peek()
    if trailing is not None:
        if trailing.kind is TokenKind.RPAREN:
            raise UnbalancedParensError("Unexpected ')'", trailing.line, trailing.column)
        raise AmrSyntaxError(
            f"Unexpected {trailing.text!r} after the root node",
            trailing.line,
            trailing.column,
            code="amr_trailing_content",
        )
    return tree
