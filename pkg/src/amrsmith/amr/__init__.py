"""AMR graphs: parsing, serialization, triples and corpus IO."""

from amrsmith.amr.corpus import (
    CorpusError,
    RawBlock,
    iter_blocks,
    load_blocks,
    load_corpus,
    read_corpus,
    write_corpus,
)
from amrsmith.amr.models import AmrGraph, Const, ConstKind, Edge, InlineAlignments, Var
from amrsmith.amr.parser import parse_amr
from amrsmith.amr.serializer import Layout, serialize_amr
from amrsmith.amr.triples import Triple, TripleKind, TripleSet, to_triples

__all__ = [
    "AmrGraph",
    "Const",
    "ConstKind",
    "CorpusError",
    "Edge",
    "InlineAlignments",
    "Layout",
    "RawBlock",
    "Triple",
    "TripleKind",
    "TripleSet",
    "Var",
    "iter_blocks",
    "load_blocks",
    "load_corpus",
    "parse_amr",
    "read_corpus",
    "serialize_amr",
    "to_triples",
    "write_corpus",
]
