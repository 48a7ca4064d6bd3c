"""Removing duplicated leaf branches from model output."""

from collections import Counter
from typing import List, Set, Tuple, Union

from amrsmith.postprocess.models import LeafNode, PruneMethod
from amrsmith.preprocess.models import ROOT_PATH, VariableFreeTree, child_path

FREQUENCY_LIMIT = 2


def leaf_nodes(tree: VariableFreeTree) -> List[LeafNode]:
    """Parenthesized childless concept nodes in pre-order; constants excluded."""
    counts: Counter = Counter()
    leaves: List[LeafNode] = []
    for path, relation, node in tree.walk():
        if relation is None or node.is_constant or node.children:
            continue
        counts[(relation, node.concept)] += 1
        parent = path.rsplit(".", 1)[0]
        leaves.append(LeafNode(relation, node.concept, parent, path, counts[(relation, node.concept)]))
    return leaves


def prunable(tree: VariableFreeTree, method: Union[PruneMethod, int]) -> List[LeafNode]:
    """Leaves a pruning method deletes, decided over the whole tree at once."""
    method = PruneMethod(method)
    if method is PruneMethod.NONE:
        return []
    seen_under: Set[Tuple[str, Tuple[str, str]]] = set()
    removed: List[LeafNode] = []
    for leaf in leaf_nodes(tree):
        repeat = leaf.occurrence > 1
        same_parent = (leaf.parent, leaf.key) in seen_under
        seen_under.add((leaf.parent, leaf.key))
        frequent = leaf.occurrence > FREQUENCY_LIMIT
        if method is PruneMethod.ALL_REPEATS:
            drop = repeat
        elif method is PruneMethod.SAME_PARENT:
            drop = same_parent
        elif method is PruneMethod.FREQUENT:
            drop = frequent
        else:
            drop = same_parent or frequent
        if drop:
            removed.append(leaf)
    return removed


def remove_paths(tree: VariableFreeTree, paths: Set[str]) -> VariableFreeTree:
    if not paths:
        return tree

    def visit(node: VariableFreeTree, path: str) -> VariableFreeTree:
        if not node.children:
            return node
        children = []
        for index, (relation, child) in enumerate(node.children):
            current = child_path(path, index)
            if current in paths:
                continue
            children.append((relation, visit(child, current)))
        return node.with_children(children)

    return visit(tree, ROOT_PATH)


def prune_with_removed(
    tree: VariableFreeTree,
    method: Union[PruneMethod, int],
) -> Tuple[VariableFreeTree, List[LeafNode]]:
    removed = prunable(tree, method)
    return remove_paths(tree, {leaf.path for leaf in removed}), removed


def prune(tree: VariableFreeTree, method: Union[PruneMethod, int]) -> VariableFreeTree:
    """Delete duplicate leaves; internal nodes are never touched.

    Occurrences of each (relation, concept) leaf are counted in pre-order
    over the full tree.
    """
    return prune_with_removed(tree, method)[0]

