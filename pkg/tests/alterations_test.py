"""Contains tests for the lift and shed alterations provided by the transforms.alterations module."""

import pytest

from tree_transversals.trees import TreeClassConstraint, validate, make_path, make_star, rooted_trees
from tree_transversals.counting import DominanceRelation, dominance, count_transversals
from tree_transversals.transforms import (
    TransformKind,
    TransformError,
    lift,
    shed,
    apply_step,
    valid_lift_pairs,
    valid_shed_pairs,
    class_preserving_steps,
)


@pytest.mark.parametrize(
    "parents, x, y, expected",
    [
        ([0, 1, 2], 3, 1, (0, 1, 1)),
        ([0, 1, 1, 2, 2], 4, 1, (0, 1, 1, 1, 2)),
        ([0, 1, 2, 3, 4], 4, 1, (0, 1, 2, 1, 4)),
    ],
)
def test_lift(parents: list[int], x: int, y: int, expected: tuple[int, ...]) -> None:
    """Verifies that lift reparents only node x."""
    assert lift(validate(parents), x, y).parents == expected


@pytest.mark.parametrize(
    "parents, x, y, keyword",
    [
        ([0, 1, 2], 3, 2, "ancestor"),
        ([0, 1, 2], 1, 1, "root"),
        ([0, 1, 1], 2, 1, "ancestor"),
        ([0, 1, 2, 3], 4, 3, "ancestor"),
    ],
)
def test_lift_preconditions(parents: list[int], x: int, y: int, keyword: str) -> None:
    """Verifies that lift rejects pairs that violate its preconditions."""
    with pytest.raises(TransformError, match=keyword):
        lift(validate(parents), x, y)


def test_shed() -> None:
    """Verifies that shed hands every child of x over to y."""
    tree = validate([0, 1, 1, 3, 2])
    altered = shed(tree, 2, 4)
    assert altered.parents == (0, 1, 1, 3, 4)
    assert altered.is_leaf(2)
    assert not altered.is_leaf(4)
    assert altered.leaf_count == tree.leaf_count


@pytest.mark.parametrize(
    "parents, x, y, keyword",
    [
        ([0, 1, 1, 3, 2], 2, 3, "leaf"),
        ([0, 1, 1, 2, 2], 2, 3, "sibling"),
        ([0, 1, 1, 2, 2], 3, 4, "leaf"),
        ([0, 1, 1, 3, 2], 1, 4, "root"),
        ([0, 1, 1, 3, 2], 2, 5, "sibling"),
    ],
)
def test_shed_preconditions(parents: list[int], x: int, y: int, keyword: str) -> None:
    """Verifies that shed rejects pairs that violate its preconditions, each with its own message."""
    with pytest.raises(TransformError, match=keyword):
        shed(validate(parents), x, y)


def test_invalid_node_identifiers() -> None:
    """Verifies that alterations reject identifiers outside 1..n."""
    with pytest.raises(IndexError):
        lift(make_path(3), 4, 1)
    with pytest.raises(IndexError):
        shed(make_path(3), 2, 0)


def test_transform_errors_are_value_errors() -> None:
    """Verifies that precondition failures can be handled as ValueError."""
    assert issubclass(TransformError, ValueError)


def test_valid_pairs() -> None:
    """Verifies the applicable pairs on hand-checked trees."""
    assert valid_lift_pairs(make_path(3)) == [(3, 1)]
    assert valid_shed_pairs(make_path(3)) == []
    assert valid_lift_pairs(make_star(4)) == []
    assert valid_shed_pairs(make_star(4)) == []
    assert valid_shed_pairs(validate([0, 1, 1, 3, 2])) == [(2, 4), (3, 5)]
    assert valid_lift_pairs(make_path(4)) == [(3, 1), (4, 1), (4, 2)]


def test_valid_pairs_are_exact() -> None:
    """Verifies that the listed pairs are exactly the pairs that both alterations accept."""
    for n in range(1, 7):
        for tree in rooted_trees(TreeClassConstraint(n=n)):
            for operation, listed in ((lift, valid_lift_pairs(tree)), (shed, valid_shed_pairs(tree))):
                assert listed == sorted(listed)
                accepted = []
                for x in range(1, n + 1):
                    for y in range(1, n + 1):
                        try:
                            operation(tree, x, y)
                        except TransformError:
                            continue
                        accepted.append((x, y))
                assert accepted == listed


def test_alterations_preserve_node_count_and_leaf_count() -> None:
    """Verifies that both alterations keep the node set and that shed keeps the leaf count."""
    for tree in rooted_trees(TreeClassConstraint(n=7)):
        for x, y in valid_lift_pairs(tree):
            assert lift(tree, x, y).n == tree.n
        for x, y in valid_shed_pairs(tree):
            altered = shed(tree, x, y)
            assert altered.n == tree.n
            assert altered.leaf_count == tree.leaf_count


def test_apply_step() -> None:
    """Verifies that apply_step records both trees of the step."""
    tree = make_path(3)
    step = apply_step(tree, "lift", 3, 1)
    assert step.kind is TransformKind.LIFT
    assert step.before == tree
    assert step.after.parents == (0, 1, 1)

    with pytest.raises(ValueError):
        apply_step(tree, "graft", 3, 1)


def test_class_preserving_steps() -> None:
    """Verifies that listed steps stay in the class and strictly decrease the count vector."""
    constraint = TreeClassConstraint(n=7, max_children=2)
    for tree in rooted_trees(constraint):
        vector = count_transversals(tree)
        steps = class_preserving_steps(tree, constraint)
        kinds = [step.kind for step in steps]
        assert kinds == sorted(kinds, key=lambda kind: kind is TransformKind.SHED)
        for step in steps:
            assert constraint.admits(step.after)
            verdict = dominance(vector, count_transversals(step.after))
            assert verdict.relation is DominanceRelation.STRICTLY_SUCCEEDS


def test_extremal_tree_has_no_class_preserving_steps() -> None:
    """Verifies that the path admits no improving step inside the class of trees with one child per node."""
    assert class_preserving_steps(make_path(5), TreeClassConstraint(n=5, max_children=1)) == []
