"""Tests for duplicate-leaf pruning."""

import random

import pytest

from amrsmith.postprocess import LeafNode, PruneMethod, leaf_nodes, prune
from amrsmith.postprocess.prune import prune_with_removed
from amrsmith.preprocess import VariableFreeTree, parse_tree, serialize_tree
from tests.samples import OPIUM_SAME_PARENT, OPIUM_SPREAD, OPIUM_TREE

SPREAD_WITHOUT_REPEATS = (
    "(material :mod (raw) :domain (opium) "
    ":ARG1-of (use-01 :ARG2 (make-01 :ARG1 (heroin) :ARG2 (opium))))"
)
SPREAD_WITHOUT_THIRD = (
    "(material :mod (raw) :domain (opium :mod (raw)) "
    ":ARG1-of (use-01 :ARG2 (make-01 :ARG1 (heroin) :ARG2 (opium))))"
)


def test_leaf_nodes_count_occurrences_in_pre_order():
    leaves = [leaf for leaf in leaf_nodes(parse_tree(OPIUM_SPREAD)) if leaf.concept == "raw"]

    assert leaves == [
        LeafNode(":mod", "raw", "0", "0.0", 1),
        LeafNode(":mod", "raw", "0.1", "0.1.0", 2),
        LeafNode(":mod", "raw", "0.2.0", "0.2.0.1", 3),
    ]


def test_leaf_nodes_skip_constants_and_inner_nodes():
    tree = parse_tree("(thing :quant 1 :mod (big :degree (very)))")
    assert [(leaf.concept, leaf.path) for leaf in leaf_nodes(tree)] == [("very", "0.1.0")]


@pytest.mark.parametrize(
    "method,expected",
    [
        (PruneMethod.NONE, OPIUM_SAME_PARENT),
        (PruneMethod.ALL_REPEATS, OPIUM_TREE),
        (PruneMethod.SAME_PARENT, OPIUM_TREE),
        (PruneMethod.FREQUENT, OPIUM_SAME_PARENT),
        (PruneMethod.COMBINED, OPIUM_TREE),
    ],
)
def test_repeat_under_one_parent(method, expected):
    """Test a leaf repeated under the same parent."""
    assert serialize_tree(prune(parse_tree(OPIUM_SAME_PARENT), method)) == expected


@pytest.mark.parametrize(
    "method,expected",
    [
        (PruneMethod.NONE, OPIUM_SPREAD),
        (PruneMethod.ALL_REPEATS, SPREAD_WITHOUT_REPEATS),
        (PruneMethod.SAME_PARENT, OPIUM_SPREAD),
        (PruneMethod.FREQUENT, SPREAD_WITHOUT_THIRD),
        (PruneMethod.COMBINED, SPREAD_WITHOUT_THIRD),
    ],
)
def test_repeats_under_different_parents(method, expected):
    """Test a leaf repeated three times across the tree."""
    assert serialize_tree(prune(parse_tree(OPIUM_SPREAD), method)) == expected


def test_methods_accept_integers():
    assert prune(parse_tree(OPIUM_SAME_PARENT), 2) == prune(parse_tree(OPIUM_SAME_PARENT), PruneMethod.SAME_PARENT)


def test_removed_leaves_reported():
    _, removed = prune_with_removed(parse_tree(OPIUM_SPREAD), PruneMethod.ALL_REPEATS)
    assert [leaf.path for leaf in removed] == ["0.1.0", "0.2.0.1"]


def test_inner_nodes_never_removed():
    """Test repeated nodes with children stay."""
    tree = parse_tree("(a :op1 (b :mod (c)) :op1 (b :mod (d)) :op1 (b :mod (e)))")
    assert prune(tree, PruneMethod.COMBINED) == tree


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        prune(parse_tree(OPIUM_TREE), 7)


def _random_tree(rng, depth=0):
    """Trees built from few labels, so duplicate leaves are common."""
    count = rng.randint(0, 4) if depth < 3 else 0
    return VariableFreeTree(
        rng.choice("abc"),
        tuple((rng.choice((":mod", ":ARG0")), _random_tree(rng, depth + 1)) for _ in range(count)),
    )


def test_pruning_methods_nest_on_random_trees():
    """Test combined = same-parent ∪ frequent, and both only drop repeats."""
    rng = random.Random(8)
    for _ in range(1000):
        tree = _random_tree(rng)
        removed = {
            method: {leaf.path for leaf in prune_with_removed(tree, method)[1]}
            for method in PruneMethod
        }

        assert removed[PruneMethod.NONE] == set()
        assert removed[PruneMethod.COMBINED] == removed[PruneMethod.SAME_PARENT] | removed[PruneMethod.FREQUENT]
        assert removed[PruneMethod.SAME_PARENT] <= removed[PruneMethod.ALL_REPEATS]
        assert removed[PruneMethod.FREQUENT] <= removed[PruneMethod.ALL_REPEATS]
        for method in PruneMethod:
            assert prune(tree, method).size() == tree.size() - len(removed[method])
