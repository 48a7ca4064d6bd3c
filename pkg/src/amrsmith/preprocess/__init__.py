"""Gold AMR-sentence pairs to the variable-free training form."""

from amrsmith.preprocess.alignments import AlignmentFormat, parse_alignments, read_tsv_sidecar
from amrsmith.preprocess.cleaning import clean_sentence
from amrsmith.preprocess.corpus import PreprocessOptions, double_data, preprocess_corpus, write_training_files
from amrsmith.preprocess.linearize import parse_tree, serialize_tree
from amrsmith.preprocess.models import Alignment, AlignmentEntry, NodeKind, SentenceRecord, TrainingPair, VariableFreeTree
from amrsmith.preprocess.reorder import (
    ConsistencyModel,
    ReorderMode,
    alpha_reordering,
    best_reordering,
    enumerate_reorderings,
)
from amrsmith.preprocess.variables import expand_graph, remove_variables, strip_wiki

__all__ = [
    "Alignment",
    "AlignmentEntry",
    "AlignmentFormat",
    "ConsistencyModel",
    "NodeKind",
    "PreprocessOptions",
    "ReorderMode",
    "SentenceRecord",
    "TrainingPair",
    "VariableFreeTree",
    "alpha_reordering",
    "best_reordering",
    "clean_sentence",
    "double_data",
    "enumerate_reorderings",
    "expand_graph",
    "parse_alignments",
    "parse_tree",
    "preprocess_corpus",
    "read_tsv_sidecar",
    "remove_variables",
    "serialize_tree",
    "strip_wiki",
    "write_training_files",
]
