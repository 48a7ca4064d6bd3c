"""Character and super-character encoding of AMR lines and sentences.

Spaces become `+`, literal `+` becomes `\\+`, everything else is one
token per character unless a super-character rule applies.
"""

import re
from typing import List, Tuple

from amrsmith.preprocess.models import SentenceRecord
from amrsmith.tokenizer.models import (
    DEPTH_PAREN_RE,
    ESCAPED_PLUS,
    SPACE_MARKER,
    SymbolKind,
    TokenSequence,
)

SUPER_RELATION_RE = re.compile(r":[A-Za-z0-9-]+")


def _char_symbol(char: str) -> Tuple[str, SymbolKind]:
    if char == " ":
        return SPACE_MARKER, SymbolKind.SPACE
    if char == "+":
        return ESCAPED_PLUS, SymbolKind.ESCAPED
    return char, SymbolKind.CHAR


def encode_amr(line: str, super_relations: bool = False, depth_parens: bool = False) -> TokenSequence:
    """Encode a single-line variable-free AMR.

    Args:
        line: AMR text on one line
        super_relations: Each `:[A-Za-z0-9-]+` run is one token
        depth_parens: Parentheses outside quotes become `*d*(` / `*d*)`,
            d being the nesting depth with the root at 1; a `)` with no
            open parenthesis stays a plain character
    """
    tokens: List[str] = []
    kinds: List[SymbolKind] = []
    depth = 0
    quoted = False
    pos = 0
    while pos < len(line):
        char = line[pos]
        if super_relations and char == ":":
            match = SUPER_RELATION_RE.match(line, pos)
            if match:
                tokens.append(match.group())
                kinds.append(SymbolKind.RELATION)
                pos = match.end()
                continue
        if char == '"':
            quoted = not quoted
        if depth_parens and not quoted and char == "(":
            depth += 1
            tokens.append(f"*{depth}*(")
            kinds.append(SymbolKind.DEPTH_PAREN)
        elif depth_parens and not quoted and char == ")" and depth > 0:
            tokens.append(f"*{depth}*)")
            kinds.append(SymbolKind.DEPTH_PAREN)
            depth -= 1
        else:
            token, kind = _char_symbol(char)
            tokens.append(token)
            kinds.append(kind)
        pos += 1
    return TokenSequence(tuple(tokens), tuple(kinds))


def encode_sentence(record: SentenceRecord, with_pos: bool = False) -> TokenSequence:
    """Encode a cleaned sentence, optionally with POS super characters.

    A word's tag follows its last character, before the next `+`; words
    with an empty tag get none.

    Raises:
        ValueError: with_pos is set and the record has no tags
    """
    if with_pos and record.tags is None:
        raise ValueError("POS insertion needs tagged sentences")
    tokens: List[str] = []
    kinds: List[SymbolKind] = []
    for index, word in enumerate(record.tokens):
        if index:
            tokens.append(SPACE_MARKER)
            kinds.append(SymbolKind.SPACE)
        for char in word:
            token, kind = _char_symbol(char)
            tokens.append(token)
            kinds.append(kind)
        if with_pos and record.tags[index]:
            tokens.append(record.tags[index])
            kinds.append(SymbolKind.POS)
    return TokenSequence(tuple(tokens), tuple(kinds))


def decode_amr(tokens: TokenSequence) -> str:
    """Text of a token sequence: `+` is a space, depth markers plain parens."""
    parts: List[str] = []
    for token, kind in zip(tokens.tokens, tokens.kinds):
        if kind is SymbolKind.SPACE:
            parts.append(" ")
        elif kind is SymbolKind.ESCAPED:
            parts.append("+")
        elif kind is SymbolKind.DEPTH_PAREN:
            match = DEPTH_PAREN_RE.fullmatch(token)
            parts.append(match.group(2) if match else token)
        else:
            parts.append(token)
    return "".join(parts)


def decode_sentence(tokens: TokenSequence) -> str:
    """Sentence text with POS super characters removed."""
    return decode_amr(tokens.without(SymbolKind.POS))
