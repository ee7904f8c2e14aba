"""Contains tests for the witness transversals and the shed injection provided by the transforms.witnesses module."""

from itertools import combinations

import pytest

from tree_transversals.trees import RootedTree, TreeClassConstraint, validate, rooted_trees
from tree_transversals.counting import is_transversal
from tree_transversals.transforms import (
    lift,
    shed,
    lift_witness,
    shed_witness,
    shed_injection,
    valid_lift_pairs,
    valid_shed_pairs,
)


def _transversals(tree: RootedTree) -> list[frozenset[int]]:
    """Lists every transversal of the tree by brute force."""
    nodes = range(1, tree.n + 1)
    return [
        frozenset(subset)
        for size in range(1, tree.n + 1)
        for subset in combinations(nodes, size)
        if is_transversal(tree, subset)
    ]


@pytest.mark.parametrize(
    "parents, x, expected",
    [
        ([0, 1, 2], 3, {2}),
        ([0, 1, 1, 2, 2], 4, {2, 3}),
        ([0, 1, 1, 2, 2], 2, {1}),
    ],
)
def test_lift_witness(parents: list[int], x: int, expected: set[int]) -> None:
    """Verifies the lift witness on hand-checked trees."""
    assert lift_witness(validate(parents), x) == expected


def test_shed_witness() -> None:
    """Verifies the shed witness on the tree [0, 1, 1, 3, 2]."""
    assert shed_witness(validate([0, 1, 1, 3, 2]), 4) == {3, 5}


def test_witnesses_reject_the_root() -> None:
    """Verifies that the root has no witness."""
    tree = validate([0, 1, 1])
    with pytest.raises(ValueError):
        lift_witness(tree, 1)
    with pytest.raises(ValueError):
        shed_witness(tree, 1)


def test_shed_injection_examples() -> None:
    """Verifies both branches of the injection on the tree [0, 1, 1, 3, 2] shed from node 2 onto node 4."""
    tree = validate([0, 1, 1, 3, 2])
    tree_prime = shed(tree, 2, 4)
    assert shed_injection(tree, tree_prime, 2, 4, {1, 5}) == {1, 5}
    assert shed_injection(tree, tree_prime, 2, 4, {2, 5}) == {4, 5}
    assert is_transversal(tree, {4, 5})


def test_shed_injection_requires_the_shed_tree() -> None:
    """Verifies that the injection refuses a second tree that is not the result of the shed."""
    tree = validate([0, 1, 1, 3, 2])
    with pytest.raises(ValueError, match="shedding"):
        shed_injection(tree, tree, 2, 4, {1})


def test_witness_properties() -> None:
    """Verifies both witness sets for every applicable pair of every tree with at most 7 nodes."""
    for n in range(3, 8):
        for tree in rooted_trees(TreeClassConstraint(n=n)):
            for x, y in valid_lift_pairs(tree):
                witness = lift_witness(tree, x)
                assert is_transversal(tree, witness)
                assert not is_transversal(lift(tree, x, y), witness)

            for x, y in valid_shed_pairs(tree):
                tree_prime = shed(tree, x, y)
                witness = shed_witness(tree, y)
                assert is_transversal(tree, witness)
                images = {shed_injection(tree, tree_prime, x, y, s) for s in _transversals(tree_prime)}
                assert witness not in images


def test_shed_injection_is_injective() -> None:
    """Verifies that the injection maps transversals to distinct transversals of the same size."""
    for n in range(3, 8):
        for tree in rooted_trees(TreeClassConstraint(n=n)):
            for x, y in valid_shed_pairs(tree):
                tree_prime = shed(tree, x, y)
                sources = _transversals(tree_prime)
                images = [shed_injection(tree, tree_prime, x, y, s) for s in sources]
                assert len(set(images)) == len(images)
                for source, image in zip(sources, images, strict=True):
                    assert len(source) == len(image)
                    assert is_transversal(tree, image)
