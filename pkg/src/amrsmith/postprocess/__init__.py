"""Raw model output back to scored AMRs."""

from amrsmith.postprocess.corpus import postprocess_lines, summarize, write_log
from amrsmith.postprocess.entity_linker import HttpEntityLinker
from amrsmith.postprocess.models import (
    LeafNode,
    LogEntry,
    PipelineResult,
    PostprocessOptions,
    PruneMethod,
    Stage,
    fallback_graph,
)
from amrsmith.postprocess.pipeline import pipeline
from amrsmith.postprocess.prune import leaf_nodes, prune
from amrsmith.postprocess.repair import repair
from amrsmith.postprocess.restore import restore_coreference, restore_variables
from amrsmith.postprocess.wikify import Gazetteer, WikiBackend, named_entities, wikify

__all__ = [
    "Gazetteer",
    "HttpEntityLinker",
    "LeafNode",
    "LogEntry",
    "PipelineResult",
    "PostprocessOptions",
    "PruneMethod",
    "Stage",
    "WikiBackend",
    "fallback_graph",
    "leaf_nodes",
    "named_entities",
    "pipeline",
    "postprocess_lines",
    "prune",
    "repair",
    "restore_coreference",
    "restore_variables",
    "summarize",
    "wikify",
    "write_log",
]
