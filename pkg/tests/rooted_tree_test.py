"""Contains tests for the RootedTree class and the parent array text helpers provided by the trees.rooted_tree
module.
"""

import pytest
from hypothesis import given, settings, strategies as st

from tree_transversals.trees import (
    CycleError,
    RootedTree,
    RootCountError,
    ParentRangeError,
    TreeClassConstraint,
    validate,
    make_path,
    make_star,
    rooted_trees,
    parse_parent_text,
    format_parent_text,
)
from tree_transversals.counting import count_transversals


def test_structure_queries() -> None:
    """Verifies the structural queries on the 5-node caterpillar [0, 1, 1, 2, 2]."""
    tree = validate([0, 1, 1, 2, 2])
    assert tree.n == 5
    assert tree.root == 1
    assert tree.children(1) == (2, 3)
    assert tree.children(2) == (4, 5)
    assert tree.children(3) == ()
    assert tree.parent(4) == 2
    assert tree.parent(1) == 0
    assert tree.leaves == frozenset({3, 4, 5})
    assert tree.leaf_count == 3
    assert tree.max_children == 2
    assert tree.depth(1) == 0
    assert tree.depth(5) == 2
    assert tree.root_path(5) == (1, 2, 5)
    assert tree.descendants(2) == frozenset({2, 4, 5})
    assert tree.subtree_size(2) == 3
    assert tree.subtree_size(1) == 5
    assert tree.siblings(4) == (5,)
    assert tree.siblings(1) == ()
    assert tree.preorder[0] == 1
    assert sorted(tree.preorder) == [1, 2, 3, 4, 5]


def test_single_node_tree() -> None:
    """Verifies that the root of the single-node tree is also its only leaf."""
    tree = validate([0])
    assert tree.n == 1
    assert tree.is_leaf(1)
    assert tree.leaves == frozenset({1})
    assert tree.max_children == 0
    assert tree.is_caterpillar()
    assert not tree.is_full_caterpillar(1)


def test_non_topological_parent_array() -> None:
    """Verifies that a parent may have a larger identifier than its child."""
    tree = validate([2, 0, 2])
    assert tree.root == 2
    assert tree.children(2) == (1, 3)
    assert tree.leaves == frozenset({1, 3})

    # Preorder still visits every parent before its children.
    position = {node: index for index, node in enumerate(tree.preorder)}
    assert position[2] < position[1]
    assert position[2] < position[3]


@pytest.mark.parametrize(
    "parents, error",
    [
        ([], ParentRangeError),
        ([0, 5], ParentRangeError),
        ([0, -1], ParentRangeError),
        ([0, 0], RootCountError),
        ([1, 1], RootCountError),
        ([0, 3, 2], CycleError),
        ([0, 1, 4, 3], CycleError),
    ],
)
def test_validation_errors(parents: list[int], error: type[Exception]) -> None:
    """Verifies that invalid parent arrays raise the matching ValueError subclass."""
    with pytest.raises(error):
        validate(parents)
    assert issubclass(error, ValueError)


def test_text_format() -> None:
    """Verifies parsing and formatting of the whitespace-separated text format."""
    tree = parse_parent_text("0 1 1 2 2")
    assert tree.parents == (0, 1, 1, 2, 2)
    assert format_parent_text(tree) == "0 1 1 2 2"
    assert RootedTree.from_text("  0\t1  2 \n").parents == (0, 1, 2)

    with pytest.raises(ParentRangeError):
        parse_parent_text("0 a 1")
    with pytest.raises(ParentRangeError):
        parse_parent_text("   ")


def test_invalid_node_queries() -> None:
    """Verifies that structural queries reject identifiers outside 1..n with IndexError."""
    tree = make_path(3)
    for node in (0, 4, -1):
        with pytest.raises(IndexError):
            tree.children(node)
    with pytest.raises(IndexError):
        tree.is_proper_ancestor(1, 9)


def test_proper_ancestors() -> None:
    """Verifies the proper ancestor relation on a path."""
    tree = make_path(4)
    assert tree.is_proper_ancestor(1, 4)
    assert tree.is_proper_ancestor(2, 3)
    assert not tree.is_proper_ancestor(3, 3)
    assert not tree.is_proper_ancestor(4, 1)


def test_canonical_code() -> None:
    """Verifies that canonical codes match exactly for isomorphic trees."""
    caterpillar = validate([0, 1, 1, 2, 2])
    assert caterpillar.canonical_code() == validate([0, 1, 1, 3, 3]).canonical_code()
    assert caterpillar.canonical_code() == validate([0, 1, 2, 2, 1]).canonical_code()
    assert caterpillar.canonical_code() != make_path(5).canonical_code()
    assert make_star(3).canonical_code() == "(()())"
    assert validate([0]).canonical_code() == "()"


@pytest.mark.parametrize(
    "parents, expected",
    [
        ([0], True),
        ([0, 1], True),
        ([0, 1, 1], True),
        ([0, 1, 1, 2, 2], True),
        ([0, 1, 1, 2, 3], False),
        ([0, 1, 1, 3, 2], False),
        ([0, 1, 2, 3, 4], True),
    ],
)
def test_is_caterpillar(parents: list[int], expected: bool) -> None:
    """Verifies the caterpillar predicate on hand-checked trees."""
    assert validate(parents).is_caterpillar() is expected


def test_caterpillars_have_no_internal_siblings() -> None:
    """Verifies that a tree is a caterpillar exactly when no two internal nodes are siblings."""
    for n in range(1, 11):
        for tree in rooted_trees(TreeClassConstraint(n=n)):
            assert tree.is_caterpillar() == (not tree.has_internal_siblings())


@pytest.mark.parametrize(
    "parents, degree, expected",
    [
        ([0, 1, 1, 2, 2], 2, True),
        ([0, 1, 1, 2, 2], 3, False),
        ([0, 1, 2], 1, True),
        ([0, 1, 1, 1], 3, True),
        ([0, 1, 1, 1], 2, False),
        ([0, 1, 1, 2], 2, True),
        ([0, 1, 2, 2], 2, False),
        ([0, 1, 1, 2, 3], 2, False),
    ],
)
def test_is_full_caterpillar(parents: list[int], degree: int, expected: bool) -> None:
    """Verifies the full caterpillar predicate, including the relaxed lowest spine node."""
    assert validate(parents).is_full_caterpillar(degree) is expected


@st.composite
def _relabeled_trees(draw: st.DrawFn, max_nodes: int = 12) -> tuple[RootedTree, list[int]]:
    """Draws a tree whose node i has a parent drawn from 1..i - 1, together with a permutation of its nodes."""
    n = draw(st.integers(min_value=1, max_value=max_nodes))
    parents = [0] + [draw(st.integers(min_value=1, max_value=node - 1)) for node in range(2, n + 1)]
    return RootedTree(parents=tuple(parents)), draw(st.permutations(list(range(1, n + 1))))


@settings(max_examples=200, deadline=None)
@given(case=_relabeled_trees())
def test_relabel_preserves_isomorphism_class(case: tuple[RootedTree, list[int]]) -> None:
    """Verifies that relabeling any tree yields an isomorphic tree with the same count vector."""
    tree, permutation = case
    relabeled = tree.relabel(permutation)
    assert relabeled.canonical_code() == tree.canonical_code()
    assert count_transversals(relabeled) == count_transversals(tree)
    assert relabeled.root == permutation[0]


def test_relabel_rejects_non_permutations() -> None:
    """Verifies that relabeling requires a permutation of 1..n."""
    tree = make_path(3)
    with pytest.raises(ValueError, match="permutation"):
        tree.relabel([1, 1, 2])
    with pytest.raises(ValueError, match="permutation"):
        tree.relabel([1, 2])
