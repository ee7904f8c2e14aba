"""Provides the exhaustive generator of rooted trees up to isomorphism and the TreeClassConstraint used to restrict it
to the tree classes covered by the extremal theorems.

Trees are generated as canonical level sequences with the constant-amortized-time successor rule. The first sequence
is the path (levels 0, 1, ..., n - 1), the last one is the star, and every rooted tree isomorphism class appears
exactly once in between. Class constraints are applied by filtering the generated trees.
"""

from collections.abc import Iterator
from dataclasses import dataclass

from ataraxis_base_utilities import console

from .rooted_tree import ROOT_SENTINEL, RootedTree


@dataclass(frozen=True)
class TreeClassConstraint:
    """Defines a class of rooted trees on a fixed number of nodes with optional degree and leaf bounds.

    Raises:
        ValueError: If n is less than 1, or if a bound is present and falls outside the 1..n - 1 range.
    """

    n: int
    """The number of nodes of every tree in the class."""
    max_children: int | None = None
    """The largest number of children any node may have, or None to leave the number of children unbounded."""
    max_leaves: int | None = None
    """The largest number of leaves a tree may have, or None to leave the number of leaves unbounded."""

    def __post_init__(self) -> None:
        """Verifies that the class bounds are consistent with the number of nodes."""
        if self.n < 1:
            message = f"Unable to define the tree class. The number of nodes must be at least 1, but got {self.n}."
            console.error(message=message, error=ValueError)

        for label, bound in (("max_children", self.max_children), ("max_leaves", self.max_leaves)):
            if bound is not None and not 1 <= bound <= self.n - 1:
                message = (
                    f"Unable to define the tree class on {self.n} nodes. The '{label}' bound must be between 1 and "
                    f"{self.n - 1}, but got {bound}."
                )
                console.error(message=message, error=ValueError)

    def admits(self, tree: RootedTree) -> bool:
        """Returns True if the input tree belongs to the class."""
        if tree.n != self.n:
            return False
        if self.max_children is not None and tree.max_children > self.max_children:
            return False
        return self.max_leaves is None or tree.leaf_count <= self.max_leaves


def _level_sequences(n: int) -> Iterator[list[int]]:
    """Yields the canonical level sequences of all rooted trees on n nodes, from the path to the star.

    Notes:
        The yielded list is reused between iterations; consumers must copy it if they need to keep it.
    """
    levels = list(range(n))
    yield levels
    while True:
        # The successor rewrites the suffix that starts at the last node deeper than level 1.
        p = n - 1
        while p >= 0 and levels[p] <= 1:
            p -= 1
        if p < 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        shift = p - q
        for index in range(p, n):
            levels[index] = levels[index - shift]
        yield levels


def _tree_from_levels(levels: list[int]) -> RootedTree:
    """Converts a preorder level sequence into a RootedTree whose node i + 1 sits at levels[i]."""
    parents = [ROOT_SENTINEL] * len(levels)
    last_at_level: list[int] = []
    for index, level in enumerate(levels):
        node = index + 1
        if level > 0:
            parents[index] = last_at_level[level - 1]
        del last_at_level[level:]
        last_at_level.append(node)
    return RootedTree(parents=tuple(parents))


def rooted_trees(constraint: TreeClassConstraint) -> Iterator[RootedTree]:
    """Yields one representative of every rooted tree isomorphism class admitted by the constraint.

    Notes:
        The representatives are numbered in preorder, so every parent precedes its children. The stream order is fixed
        (path first, star last), which makes verification reports reproducible.

    Args:
        constraint: The class of trees to generate.

    Yields:
        RootedTree instances with pairwise distinct canonical codes.
    """
    for levels in _level_sequences(constraint.n):
        tree = _tree_from_levels(levels)
        if constraint.admits(tree):
            yield tree


def class_count(constraint: TreeClassConstraint) -> int:
    """Returns the number of rooted tree isomorphism classes admitted by the constraint."""
    return sum(1 for _ in rooted_trees(constraint))
