"""Character-level encoding for the external translation model."""

from amrsmith.tokenizer.encoder import decode_amr, decode_sentence, encode_amr, encode_sentence
from amrsmith.tokenizer.models import SymbolKind, TokenSequence, Vocab, build_vocab
from amrsmith.tokenizer.tags import attach_tags, read_tag_sidecar

__all__ = [
    "SymbolKind",
    "TokenSequence",
    "Vocab",
    "attach_tags",
    "build_vocab",
    "decode_amr",
    "decode_sentence",
    "encode_amr",
    "encode_sentence",
    "read_tag_sidecar",
]
