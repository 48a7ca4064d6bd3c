"""Removing variables and wiki links from gold graphs."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple

from amrsmith.amr.models import AmrGraph, Const, Edge
from amrsmith.preprocess.models import ROOT_PATH, NodeKind, VariableFreeTree, child_path

logger = logging.getLogger(__name__)

WIKI_RELATION = ":wiki"


def strip_wiki(graph: AmrGraph) -> AmrGraph:
    """Drop every `:wiki` edge; nothing else changes."""
    return strip_relation(graph, WIKI_RELATION)


def strip_relation(graph: AmrGraph, relation: str) -> AmrGraph:
    kept = [e for e in graph.edges if e.relation != relation]
    if len(kept) == len(graph.edges):
        return graph
    return graph.with_edges(kept)


def strip_tree_relation(tree: VariableFreeTree, relation: str) -> VariableFreeTree:
    """Drop children reached through relation, at every depth."""
    return tree.with_children(
        (rel, strip_tree_relation(child, relation))
        for rel, child in tree.children
        if rel != relation
    )


@dataclass
class Expansion:
    """Result of expanding a graph into a tree.

    Attributes:
        tree: The variable-free tree
        variable_paths: variable → every path holding its concept; the first
            path is the full expansion, later ones are concept copies
        constant_paths: edge index → path of the constant leaf
        cycles: Variables re-entered while on their own expansion path
    """
    tree: VariableFreeTree
    variable_paths: Dict[str, List[str]] = field(default_factory=dict)
    constant_paths: Dict[int, str] = field(default_factory=dict)
    cycles: List[str] = field(default_factory=list)


def expand_graph(graph: AmrGraph) -> Expansion:
    """Depth-first expansion from the top following edge order.

    The first occurrence of a variable expands its subtree; every later
    occurrence becomes a childless copy of its concept.
    """
    outgoing: Dict[str, List[Tuple[int, Edge]]] = {v: [] for v in graph.instances}
    for index, edge in enumerate(graph.edges):
        outgoing[edge.source].append((index, edge))

    expansion = Expansion(tree=VariableFreeTree(graph.concept(graph.top)))
    expanded: Set[str] = set()
    on_path: Set[str] = set()

    def expand(variable: str, path: str) -> VariableFreeTree:
        expansion.variable_paths.setdefault(variable, []).append(path)
        if variable in expanded:
            if variable in on_path:
                expansion.cycles.append(variable)
            return VariableFreeTree(graph.concept(variable))
        expanded.add(variable)
        on_path.add(variable)
        children = []
        for position, (index, edge) in enumerate(outgoing[variable]):
            target_path = child_path(path, position)
            if isinstance(edge.target, Const):
                expansion.constant_paths[index] = target_path
                kind = NodeKind.from_constant(edge.target.kind)
                children.append((edge.relation, VariableFreeTree(edge.target.literal, (), kind)))
            else:
                children.append((edge.relation, expand(edge.target.id, target_path)))
        on_path.discard(variable)
        return VariableFreeTree(graph.concept(variable), tuple(children))

    expansion.tree = expand(graph.top, ROOT_PATH)
    return expansion


def remove_variables(graph: AmrGraph) -> VariableFreeTree:
    """Variable-free tree of a graph; re-entrant nodes become concept copies.

    Cycles are cut at one level and logged as warnings.
    """
    expansion = expand_graph(graph)
    for variable in expansion.cycles:
        logger.warning(
            f"Cyclic reference to {variable!r} cut at one level",
            extra={"variable": variable, "amr_id": graph.metadata.get("id")},
        )
    return expansion.tree
