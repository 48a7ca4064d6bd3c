"""Token sequences exchanged with the character-level translation model."""

import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, List, Tuple, Union

SPACE_MARKER = "+"
ESCAPED_PLUS = "\\+"
DEPTH_PAREN_RE = re.compile(r"\*(\d+)\*([()])")


class SymbolKind(str, Enum):
    CHAR = "char"
    SPACE = "space"
    ESCAPED = "escaped"
    RELATION = "relation"
    POS = "pos"
    DEPTH_PAREN = "depth-paren"


def infer_kind(token: str) -> SymbolKind:
    """Kind of a token read back from a file.

    One-character POS tags (`.`, `,`) read back as characters.
    """
    if token == SPACE_MARKER:
        return SymbolKind.SPACE
    if token == ESCAPED_PLUS:
        return SymbolKind.ESCAPED
    if len(token) == 1:
        return SymbolKind.CHAR
    if DEPTH_PAREN_RE.fullmatch(token):
        return SymbolKind.DEPTH_PAREN
    if token.startswith(":"):
        return SymbolKind.RELATION
    return SymbolKind.POS


@dataclass(frozen=True)
class TokenSequence:
    """One model line: atomic symbols with their kinds."""
    tokens: Tuple[str, ...] = ()
    kinds: Tuple[SymbolKind, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        kinds = tuple(self.kinds) if self.kinds else tuple(infer_kind(t) for t in self.tokens)
        if len(kinds) != len(self.tokens):
            raise ValueError("tokens and kinds differ in length")
        object.__setattr__(self, "kinds", kinds)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    @classmethod
    def from_line(cls, line: str) -> "TokenSequence":
        return cls(tuple(line.split()))

    def to_line(self) -> str:
        """Tokens joined by single spaces."""
        return " ".join(self.tokens)

    def without(self, kind: SymbolKind) -> "TokenSequence":
        kept = [(t, k) for t, k in zip(self.tokens, self.kinds) if k is not kind]
        return TokenSequence(tuple(t for t, _ in kept), tuple(k for _, k in kept))


@dataclass
class Vocab:
    """Symbol frequencies over a corpus of token sequences."""
    counts: Counter = field(default_factory=Counter)

    def __len__(self) -> int:
        return len(self.counts)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.counts

    def __getitem__(self, symbol: str) -> int:
        return self.counts[symbol]

    def update(self, sequence: Iterable[str]) -> None:
        self.counts.update(sequence)

    def report_lines(self) -> List[str]:
        """`symbol<TAB>count` lines, most frequent first, ties by symbol."""
        ordered = sorted(self.counts.items(), key=lambda item: (-item[1], item[0]))
        return [f"{symbol}\t{count}" for symbol, count in ordered]

    def write(self, path: Union[str, Path]) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.writelines(line + "\n" for line in self.report_lines())


def build_vocab(sequences: Iterable[TokenSequence]) -> Vocab:
    vocab = Vocab()
    for sequence in sequences:
        vocab.update(sequence)
    return vocab
