"""Turning variable-free trees back into graphs."""

import re
from typing import Dict, List, Set, Tuple

from amrsmith.amr.models import AmrGraph, Const, Edge, Var
from amrsmith.preprocess.models import VariableFreeTree

_LETTER_RE = re.compile(r"[a-z]")
DEFAULT_VARIABLE = "x"


def variable_stem(concept: str) -> str:
    """First ASCII letter of the lowercased concept, `x` when it has none.

    Only `[a-z]` counts: a variable must have the shape `[a-z][0-9]*` to
    read back as a reference.
    """
    match = _LETTER_RE.search(concept.lower())
    return match.group() if match else DEFAULT_VARIABLE


def restore_variables(tree: VariableFreeTree) -> AmrGraph:
    """Give every concept node a fresh variable.

    Names are taken in pre-order; collisions get suffixes 2, 3, … so two
    opium nodes become o and o2. Constant leaves stay constants.
    """
    taken: Set[str] = set()
    instances: Dict[str, str] = {}
    edges: List[Edge] = []

    def fresh(concept: str) -> str:
        stem = variable_stem(concept)
        name, n = stem, 1
        while name in taken:
            n += 1
            name = f"{stem}{n}"
        taken.add(name)
        return name

    def visit(node: VariableFreeTree) -> str:
        variable = fresh(node.concept)
        instances[variable] = node.concept
        for relation, child in node.children:
            if child.is_constant:
                edges.append(Edge(variable, relation, Const(child.concept, child.kind.constant_kind)))
                continue
            slot = len(edges)
            edges.append(None)
            edges[slot] = Edge(variable, relation, Var(visit(child)), inline=True)
        return variable

    top = visit(tree)
    return AmrGraph(top=top, instances=instances, edges=tuple(edges))


def restore_coreference_with_merges(graph: AmrGraph) -> Tuple[AmrGraph, List[Tuple[str, str]]]:
    """restore_coreference plus the (removed, kept) variable pairs."""
    first_of: Dict[str, str] = {}
    has_children = {e.source for e in graph.edges}
    merged_concepts: Set[str] = set()
    merges: Dict[str, str] = {}

    for variable, concept in graph.instances.items():
        first_of.setdefault(concept, variable)

    for edge in graph.edges:
        if not isinstance(edge.target, Var) or not edge.inline:
            continue
        target = edge.target.id
        concept = graph.concept(target)
        first = first_of[concept]
        if target == first or target in has_children or concept in merged_concepts:
            continue
        merges[target] = first
        merged_concepts.add(concept)

    if not merges:
        return graph, []
    edges = [
        Edge(e.source, e.relation, Var(merges[e.target.id]), inline=False)
        if isinstance(e.target, Var) and e.target.id in merges else e
        for e in graph.edges
    ]
    instances = {v: c for v, c in graph.instances.items() if v not in merges}
    restored = AmrGraph(graph.top, instances, tuple(edges), metadata=graph.metadata)
    return restored, list(merges.items())


def restore_coreference(graph: AmrGraph) -> AmrGraph:
    """Merge a repeated childless node into the first node with its concept.

    Scanning depth-first, the second node of a concept is replaced by a
    reference to the first when it has no children; this happens at most
    once per concept.
    """
    return restore_coreference_with_merges(graph)[0]
