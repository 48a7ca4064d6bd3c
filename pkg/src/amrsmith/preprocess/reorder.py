"""Child reorderings of variable-free trees.

`best` moves aligned children into sentence order, `alpha` sorts children
by relation and concept, `consistency` swaps adjacent siblings into the
majority order seen in a corpus and `none` keeps the gold order.
"""

import itertools
import logging
from collections import Counter
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from amrsmith.preprocess.linearize import serialize_tree
from amrsmith.preprocess.models import ROOT_PATH, Alignment, AlignmentEntry, VariableFreeTree, child_path

logger = logging.getLogger(__name__)


class ReorderMode(str, Enum):
    BEST = "best"
    ALPHA = "alpha"
    CONSISTENCY = "consistency"
    NONE = "none"


def _sort_keys(tree: VariableFreeTree, alignment: Alignment) -> Dict[str, int]:
    """Sort key of every node with an aligned token in its subtree, by path.

    An aligned node is keyed by its own first token; an unaligned node by
    the smallest token aligned anywhere below it.
    """
    own = alignment.first_token_by_path()
    keys: Dict[str, int] = {}

    def visit(node: VariableFreeTree, path: str) -> Optional[int]:
        lowest = own.get(path)
        for index, (_, child) in enumerate(node.children):
            below = visit(child, child_path(path, index))
            if below is not None and (lowest is None or below < lowest):
                lowest = below
        if path in own:
            keys[path] = own[path]
        elif lowest is not None:
            keys[path] = lowest
        return lowest

    visit(tree, ROOT_PATH)
    return keys


def _block_order(keys: List[Optional[int]]) -> List[int]:
    """Child order: each aligned child carries the unaligned children after it.

    Unaligned children before the first aligned one stay in front; blocks
    are stably sorted by their aligned child's key.
    """
    leading: List[int] = []
    blocks: List[Tuple[int, List[int]]] = []
    for index, key in enumerate(keys):
        if key is None:
            (blocks[-1][1] if blocks else leading).append(index)
        else:
            blocks.append((key, [index]))
    blocks.sort(key=lambda block: block[0])
    return leading + [i for _, members in blocks for i in members]


def _rebuild(
    tree: VariableFreeTree,
    order_of: Callable[[VariableFreeTree, str], List[int]],
) -> Tuple[VariableFreeTree, Dict[str, str]]:
    """Apply a per-node child order, returning the old → new path map."""
    renamed: Dict[str, str] = {}

    def visit(node: VariableFreeTree, old: str, new: str) -> VariableFreeTree:
        renamed[old] = new
        if not node.children:
            return node
        order = order_of(node, old)
        children = []
        for position, index in enumerate(order):
            relation, child = node.children[index]
            children.append((relation, visit(child, child_path(old, index), child_path(new, position))))
        return node.with_children(children)

    return visit(tree, ROOT_PATH, ROOT_PATH), renamed


def remap_alignment(alignment: Alignment, renamed: Dict[str, str]) -> Alignment:
    return Alignment(tuple(
        AlignmentEntry(e.start, e.end, renamed.get(e.path, e.path)) for e in alignment
    ))


def best_reordering_with_alignment(
    tree: VariableFreeTree,
    alignment: Alignment,
) -> Tuple[VariableFreeTree, Alignment]:
    """best_reordering that also rewrites the alignment for the new tree."""
    keys = _sort_keys(tree, alignment)

    def order_of(node: VariableFreeTree, path: str) -> List[int]:
        return _block_order([keys.get(child_path(path, i)) for i in range(len(node.children))])

    reordered, renamed = _rebuild(tree, order_of)
    return reordered, remap_alignment(alignment, renamed)


def best_reordering(tree: VariableFreeTree, alignment: Alignment) -> VariableFreeTree:
    """Reorder children at every node to follow the sentence's word order.

    A child is keyed by its own first aligned token, or by the smallest
    token aligned in its subtree when it has none of its own.
    Unaligned children travel with the aligned sibling before them.
    """
    return best_reordering_with_alignment(tree, alignment)[0]


def alpha_reordering(tree: VariableFreeTree) -> VariableFreeTree:
    """Children sorted by relation, then concept."""
    def order_of(node: VariableFreeTree, path: str) -> List[int]:
        return sorted(
            range(len(node.children)),
            key=lambda i: (node.children[i][0], node.children[i][1].concept),
        )

    return _rebuild(tree, order_of)[0]


class ConsistencyModel:
    """Majority sibling order of relation pairs, learnt from a corpus."""

    def __init__(self):
        self.before: Counter = Counter()

    def fit(self, trees: Iterable[VariableFreeTree]) -> "ConsistencyModel":
        for tree in trees:
            for _, _, node in tree.walk():
                relations = [rel for rel, _ in node.children]
                for i, a in enumerate(relations):
                    for b in relations[i + 1:]:
                        if a != b:
                            self.before[(a, b)] += 1
        logger.debug(f"Learnt sibling order from {len(self.before)} relation pairs")
        return self

    def prefers_swap(self, first: str, second: str) -> bool:
        return self.before[(second, first)] > self.before[(first, second)]

    def reorder(self, tree: VariableFreeTree) -> VariableFreeTree:
        """Swap adjacent siblings that appear in minority order.

        Runs one bubble pass per child, so non-transitive majorities still
        terminate.
        """
        def order_of(node: VariableFreeTree, path: str) -> List[int]:
            order = list(range(len(node.children)))
            for _ in range(len(order)):
                swapped = False
                for i in range(len(order) - 1):
                    a = node.children[order[i]][0]
                    b = node.children[order[i + 1]][0]
                    if self.prefers_swap(a, b):
                        order[i], order[i + 1] = order[i + 1], order[i]
                        swapped = True
                if not swapped:
                    break
            return order

        return _rebuild(tree, order_of)[0]


def enumerate_reorderings(tree: VariableFreeTree, limit: int) -> List[VariableFreeTree]:
    """Distinct child-permutation variants, original first, at most limit.

    Permutations of a node's children vary slowest; variants of the
    children vary within each permutation.

    Raises:
        ValueError: limit < 1
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")

    def variants(node: VariableFreeTree) -> List[VariableFreeTree]:
        if not node.children:
            return [node]
        child_variants = [variants(child) for _, child in node.children]
        found: List[VariableFreeTree] = []
        seen = set()
        for order in itertools.permutations(range(len(node.children))):
            relations = [node.children[i][0] for i in order]
            for combination in itertools.product(*(child_variants[i] for i in order)):
                candidate = node.with_children(zip(relations, combination))
                key = serialize_tree(candidate)
                if key in seen:
                    continue
                seen.add(key)
                found.append(candidate)
                if len(found) >= limit:
                    return found
        return found

    return variants(tree)

