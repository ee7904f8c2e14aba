"""Provides the two tree alterations that strictly decrease the count vector: lift, which moves a node up to a proper
ancestor of its parent, and shed, which hands all children of an internal node over to a leaf lying below one of the
node's siblings.
"""

from __future__ import annotations

from enum import StrEnum
from typing import TYPE_CHECKING
from dataclasses import dataclass

from ataraxis_base_utilities import console

from ..trees import ROOT_SENTINEL, RootedTree

if TYPE_CHECKING:
    from ..trees import TreeClassConstraint


class TransformKind(StrEnum):
    """Defines the supported tree alterations."""

    LIFT = "lift"
    """Reparents node x to a proper ancestor y of its parent."""
    SHED = "shed"
    """Reparents every child of node x to the leaf y, which lies properly below a sibling of x."""


class TransformError(ValueError):
    """Raised when a (x, y) pair does not satisfy the preconditions of the requested alteration."""


@dataclass(frozen=True)
class TransformStep:
    """Stores a single applied alteration together with the trees before and after it."""

    kind: TransformKind
    """The applied alteration."""
    x: int
    """The node moved by a lift, or the node whose children are moved by a shed."""
    y: int
    """The new parent: the ancestor chosen by a lift, or the leaf receiving the children in a shed."""
    before: RootedTree
    """The tree the alteration was applied to."""
    after: RootedTree
    """The tree produced by the alteration."""


def _verify_lift(tree: RootedTree, x: int, y: int) -> None:
    """Ensures that (x, y) satisfies the lift preconditions.

    Raises:
        IndexError: If x or y is not a node of the tree.
        TransformError: If x is the root, or y is not a proper ancestor of the parent of x.
    """
    tree.verify_node(x)
    tree.verify_node(y)
    parent = tree.parents[x - 1]
    if parent == ROOT_SENTINEL:
        message = f"Unable to lift node {x}. The root cannot be lifted."
        console.error(message=message, error=TransformError)
    if not tree.is_proper_ancestor(y, parent):
        message = f"Unable to lift node {x} to node {y}. The target must be a proper ancestor of node {parent}."
        console.error(message=message, error=TransformError)


def _verify_shed(tree: RootedTree, x: int, y: int) -> None:
    """Ensures that (x, y) satisfies the shed preconditions.

    Raises:
        IndexError: If x or y is not a node of the tree.
        TransformError: If x is the root or a leaf, y is not a leaf, or y is not a proper descendant of a sibling of x.
    """
    tree.verify_node(x)
    tree.verify_node(y)
    if tree.parents[x - 1] == ROOT_SENTINEL:
        message = f"Unable to shed node {x}. The root cannot be shed."
        console.error(message=message, error=TransformError)
    if tree.is_leaf(x):
        message = f"Unable to shed node {x}. A leaf has no children to shed."
        console.error(message=message, error=TransformError)
    if not tree.is_leaf(y):
        message = f"Unable to shed node {x} onto node {y}. The receiving node must be a leaf."
        console.error(message=message, error=TransformError)
    if not any(tree.is_proper_ancestor(sibling, y) for sibling in tree.siblings(x)):
        message = (
            f"Unable to shed node {x} onto node {y}. The receiving node must lie properly below a sibling of node {x}."
        )
        console.error(message=message, error=TransformError)


def lift(tree: RootedTree, x: int, y: int) -> RootedTree:
    """Reparents node x to node y, which must be a proper ancestor of the parent of x.

    Notes:
        Every other parent link is kept, so the subtree of x moves as a whole. The result is strictly dominated by the
        input tree.

    Args:
        tree: The tree to alter.
        x: The non-root node to move.
        y: The new parent of x.

    Returns:
        The altered tree on the same node set.

    Raises:
        IndexError: If x or y is not a node of the tree.
        TransformError: If the pair violates the lift preconditions.
    """
    _verify_lift(tree=tree, x=x, y=y)
    parents = list(tree.parents)
    parents[x - 1] = y
    return RootedTree(parents=tuple(parents))


def shed(tree: RootedTree, x: int, y: int) -> RootedTree:
    """Reparents every child of node x to the leaf y.

    Notes:
        After the alteration x is a leaf and y is internal, so the leaf count is unchanged. The result is strictly
        dominated by the input tree.

    Args:
        tree: The tree to alter.
        x: The internal non-root node whose children are moved.
        y: The leaf receiving the children. It must be a proper descendant of a sibling of x.

    Returns:
        The altered tree on the same node set.

    Raises:
        IndexError: If x or y is not a node of the tree.
        TransformError: If the pair violates the shed preconditions.
    """
    _verify_shed(tree=tree, x=x, y=y)
    parents = tuple(y if parent == x else parent for parent in tree.parents)
    return RootedTree(parents=parents)


def valid_lift_pairs(tree: RootedTree) -> list[tuple[int, int]]:
    """Returns every (x, y) pair accepted by lift(), in ascending lexicographic order."""
    pairs: list[tuple[int, int]] = []
    for x in range(1, tree.n + 1):
        parent = tree.parents[x - 1]
        if parent == ROOT_SENTINEL:
            continue
        # The proper ancestors of the parent are its root path without the parent itself.
        pairs.extend((x, y) for y in sorted(tree.root_path(parent)[:-1]))
    return pairs


def valid_shed_pairs(tree: RootedTree) -> list[tuple[int, int]]:
    """Returns every (x, y) pair accepted by shed(), in ascending lexicographic order."""
    pairs: list[tuple[int, int]] = []
    for x in range(1, tree.n + 1):
        if tree.parents[x - 1] == ROOT_SENTINEL or tree.is_leaf(x):
            continue
        receivers: set[int] = set()
        for sibling in tree.siblings(x):
            receivers.update(leaf for leaf in tree.descendants(sibling) if leaf != sibling and tree.is_leaf(leaf))
        pairs.extend((x, y) for y in sorted(receivers))
    return pairs


def apply_step(tree: RootedTree, kind: TransformKind | str, x: int, y: int) -> TransformStep:
    """Applies the requested alteration and returns the full step record.

    Raises:
        ValueError: If the kind is not a supported alteration.
        IndexError: If x or y is not a node of the tree.
        TransformError: If the pair violates the preconditions of the alteration.
    """
    kind = TransformKind(kind)
    after = lift(tree, x, y) if kind is TransformKind.LIFT else shed(tree, x, y)
    return TransformStep(kind=kind, x=x, y=y, before=tree, after=after)


def class_preserving_steps(tree: RootedTree, constraint: TreeClassConstraint) -> list[TransformStep]:
    """Lists every single lift or shed step whose result stays inside the constraint's tree class.

    Notes:
        Lift steps come first, then shed steps, each group ordered by (x, y). For a tree of the class that is not
        isomorphic to the class's extremal caterpillar, this list is never empty.

    Args:
        tree: The starting tree.
        constraint: The tree class the results must belong to.

    Returns:
        The admitted steps.
    """
    steps: list[TransformStep] = []
    for kind, pairs in ((TransformKind.LIFT, valid_lift_pairs(tree)), (TransformKind.SHED, valid_shed_pairs(tree))):
        for x, y in pairs:
            step = apply_step(tree=tree, kind=kind, x=x, y=y)
            if constraint.admits(step.after):
                steps.append(step)
    return steps
