"""Tokenizer for PENMAN-notation AMR text."""

import bisect
import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from amrsmith.utils.errors import AmrSyntaxError, UnterminatedStringError


class TokenKind(Enum):
    LPAREN = "("
    RPAREN = ")"
    SLASH = "/"
    ROLE = "role"
    STRING = "string"
    SYMBOL = "symbol"


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
    |(?P<lparen>\()
    |(?P<rparen>\))
    |(?P<slash>/)
    |(?P<string>"[^"]*")(?P<string_align>~(?:[A-Za-z]+\.)?[0-9]+(?:,[0-9]+)*)?
    |(?P<unterminated>")
    |(?P<role>:[^\s()"/:]+)
    |(?P<symbol>[^\s()"/:][^\s()"/]*)
    """,
    re.VERBOSE,
)

# Trailing `~e.3` / `~e.3,4` / `~3` alignment marker on a symbol or role
_ALIGNMENT_SUFFIX_RE = re.compile(r"(.+?)~(?:[A-Za-z]+\.)?([0-9]+(?:,[0-9]+)*)")


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int
    alignment: Optional[Tuple[int, ...]] = None


def split_alignment(text: str) -> Tuple[str, Optional[Tuple[int, ...]]]:
    """Separate an inline alignment marker from a token's text."""
    match = _ALIGNMENT_SUFFIX_RE.fullmatch(text)
    if not match:
        return text, None
    return match.group(1), tuple(int(i) for i in match.group(2).split(","))


class _Positions:
    """Offset → (line, column) conversion, both 1-based."""

    def __init__(self, text: str, first_line: int):
        self._starts = [0] + [m.end() for m in re.finditer("\n", text)]
        self._first_line = first_line

    def __call__(self, offset: int) -> Tuple[int, int]:
        row = bisect.bisect_right(self._starts, offset) - 1
        return self._first_line + row, offset - self._starts[row] + 1


def tokenize_amr(text: str, first_line: int = 1) -> List[Token]:
    """Split AMR text into tokens.

    Args:
        text: AMR text without metadata lines
        first_line: Line number of the first line of text, for error positions

    Raises:
        UnterminatedStringError: A quote is never closed
    """
    position = _Positions(text, first_line)
    tokens: List[Token] = []
    offset = 0
    while offset < len(text):
        match = _TOKEN_RE.match(text, offset)
        line, column = position(offset)
        if match is None:
            raise AmrSyntaxError(f"Unexpected character {text[offset]!r}", line, column)
        group = match.lastgroup
        if group == "unterminated":
            raise UnterminatedStringError("Unterminated string", line, column)
        if group == "string_align":
            raw = match.group("string")
            alignment = tuple(int(i) for i in re.findall(r"[0-9]+", match.group("string_align").split(".")[-1]))
            tokens.append(Token(TokenKind.STRING, raw, line, column, alignment))
        elif group == "string":
            tokens.append(Token(TokenKind.STRING, match.group(), line, column))
        elif group == "lparen":
            tokens.append(Token(TokenKind.LPAREN, "(", line, column))
        elif group == "rparen":
            tokens.append(Token(TokenKind.RPAREN, ")", line, column))
        elif group == "slash":
            tokens.append(Token(TokenKind.SLASH, "/", line, column))
        elif group in ("role", "symbol"):
            value, alignment = split_alignment(match.group())
            kind = TokenKind.ROLE if group == "role" else TokenKind.SYMBOL
            tokens.append(Token(kind, value, line, column, alignment))
        offset = match.end()
    return tokens
