"""Lenient parsing of raw model output into a variable-free tree.

The translation model emits characters, so its lines may have unbalanced
parentheses, unclosed quotes, relations without values and nodes without
concepts. repair() never fails: whatever cannot be salvaged is dropped and
an empty result becomes `(amr-empty)`.
"""

import re
import unicodedata
from typing import List, Optional, Tuple, Union

from amrsmith.amr.models import classify_constant
from amrsmith.postprocess.models import FALLBACK_CONCEPT
from amrsmith.preprocess.models import NodeKind, VariableFreeTree

_LENIENT_RE = re.compile(
    r"""
    (?P<string>"[^"]*")
    |(?P<lparen>\()
    |(?P<rparen>\))
    |(?P<slash>/)
    |(?P<role>:[^\s()"/:]+)
    |(?P<symbol>[^\s()"/:][^\s()"/]*)
    |(?P<other>\S)
    """,
    re.VERBOSE,
)

_Token = Tuple[str, str]


def clean_symbol(text: str) -> str:
    """Bare symbol or role text without `~` and control characters.

    Symbols also lose leading colons so they cannot turn into a role.
    """
    kept = "".join(c for c in text if c != "~" and unicodedata.category(c) != "Cc")
    return kept if text.startswith(":") else kept.lstrip(":")


def close_quotes(text: str) -> Tuple[str, int]:
    """Close quotes left open before `(`, `)`, ` :` or the end of the line.

    A colon ends a quote only after whitespace, so `"12:30"` and URLs stay
    single strings.

    Returns:
        (fixed text, number of quotes inserted)
    """
    out: List[str] = []
    quoted = False
    inserted = 0
    for i, char in enumerate(text):
        if quoted:
            boundary = char in "()" or (char == ":" and i > 0 and text[i - 1].isspace())
            if boundary:
                body = "".join(out).rstrip()
                trailing = "".join(out)[len(body):]
                out = [body, '"', trailing]
                quoted = False
                inserted += 1
            elif char == '"':
                quoted = False
        elif char == '"':
            quoted = True
        out.append(char)
    if quoted:
        body = "".join(out).rstrip()
        out = [body, '"']
        inserted += 1
    return "".join(out), inserted


def _lex(text: str) -> List[_Token]:
    tokens = []
    for match in _LENIENT_RE.finditer(text):
        kind = match.lastgroup
        value = match.group()
        if kind == "string":
            value = '"' + " ".join(value[1:-1].split()) + '"'
        elif kind in ("symbol", "role"):
            value = clean_symbol(value)
            if value in ("", ":"):
                continue
        tokens.append((kind, value))
    return tokens


class _Repairer:
    def __init__(self, tokens: List[_Token]):
        self.tokens = tokens
        self.pos = 0
        self.actions: List[str] = []

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def peek_kind(self, offset: int = 0) -> Optional[str]:
        index = self.pos + offset
        return self.tokens[index][0] if index < len(self.tokens) else None

    def concept(self) -> Optional[str]:
        """Concept after `(`, dropping a `var /` prefix."""
        if self.peek_kind() == "symbol" and self.peek_kind(1) == "slash":
            if self.peek_kind(2) in ("symbol", "string"):
                self.actions.append(f"dropped variable {self.tokens[self.pos][1]}")
                self.pos += 2
        if self.peek_kind() in ("symbol", "string") and self.peek()[1] != '""':
            value = self.peek()[1]
            self.pos += 1
            return value
        return None

    def node(self, is_root: bool) -> Optional[VariableFreeTree]:
        self.pos += 1
        concept = self.concept()
        children: List[Tuple[str, VariableFreeTree]] = []
        self.body(children, closing=True)
        if concept is None:
            self.actions.append("deleted node without concept")
            return None
        kind = classify_constant(concept)
        if not children and not is_root and kind is not None:
            return self.constant(concept)
        return VariableFreeTree(concept, tuple(children))

    def constant(self, value: str) -> VariableFreeTree:
        kind = classify_constant(value)
        if kind is None:
            return VariableFreeTree(value, (), NodeKind.SYMBOL)
        if value.startswith('"'):
            return VariableFreeTree(value[1:-1], (), NodeKind.QUOTED)
        return VariableFreeTree(value, (), NodeKind.from_constant(kind))

    def body(self, children: List[Tuple[str, VariableFreeTree]], closing: bool) -> None:
        """Relations of one node, up to its `)`.

        With closing=False (after the root closed) `)` is surplus and the
        relations found are attached to the root.
        """
        while True:
            token = self.peek()
            if token is None:
                if closing:
                    self.actions.append("appended missing )")
                return
            kind, value = token
            if kind == "rparen":
                self.pos += 1
                if closing:
                    return
                self.actions.append("dropped surplus )")
            elif kind == "role":
                self.pos += 1
                child = self.value(value)
                if child is not None:
                    if not closing:
                        self.actions.append(f"re-attached {value} to the root")
                    children.append((value, child))
            elif kind == "lparen":
                self.actions.append("dropped node without relation")
                self.node(is_root=False)
            else:
                self.pos += 1
                self.actions.append(f"dropped stray token {value}")

    def value(self, relation: str) -> Optional[VariableFreeTree]:
        kind = self.peek_kind()
        if kind == "lparen":
            child = self.node(is_root=False)
            if child is None:
                self.actions.append(f"deleted unfinished relation {relation}")
            return child
        if kind in ("symbol", "string") and self.peek()[1] != '""':
            value = self.peek()[1]
            self.pos += 1
            return self.constant(value)
        self.actions.append(f"deleted unfinished relation {relation}")
        return None

    def run(self) -> Optional[VariableFreeTree]:
        while self.peek() is not None and self.peek_kind() != "lparen":
            self.actions.append(f"dropped stray token {self.peek()[1]}")
            self.pos += 1
        if self.peek() is None:
            return None
        root = self.node(is_root=True)
        if root is None:
            return None
        extra: List[Tuple[str, VariableFreeTree]] = []
        self.body(extra, closing=False)
        if extra:
            root = root.with_children(root.children + tuple(extra))
        return root


def repair_with_actions(raw: Union[str, bytes]) -> Tuple[VariableFreeTree, List[str]]:
    """repair() plus a description of every change made."""
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8", errors="replace")
    text = " ".join(raw.split())
    text, inserted = close_quotes(text)
    actions = ["closed quote"] * inserted
    repairer = _Repairer(_lex(text))
    tree = repairer.run()
    actions.extend(repairer.actions)
    if tree is None:
        actions.append(f"fell back to ({FALLBACK_CONCEPT})")
        tree = VariableFreeTree(FALLBACK_CONCEPT)
    return tree, actions


def repair(raw: Union[str, bytes]) -> VariableFreeTree:
    """Always-parseable tree for one model output line."""
    return repair_with_actions(raw)[0]
