"""Provides the witness transversals that certify strict dominance for both alterations, and the size-preserving
injection that maps the transversals of a shed tree back into the transversals of the original tree.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from ataraxis_base_utilities import console

from ..trees import ROOT_SENTINEL
from .alterations import shed

if TYPE_CHECKING:
    from collections.abc import Iterable

    from ..trees import RootedTree


def _parent_witness(tree: RootedTree, node: int, label: str) -> frozenset[int]:
    """Returns the parent of the node together with every leaf that lies outside the parent's subtree.

    Raises:
        IndexError: If the node is not a node of the tree.
        ValueError: If the node is the root.
    """
    tree.verify_node(node)
    parent = tree.parents[node - 1]
    if parent == ROOT_SENTINEL:
        message = f"Unable to build the {label} witness for node {node}. The root has no parent."
        console.error(message=message, error=ValueError)
    return frozenset({parent}) | (tree.leaves - tree.descendants(parent))


def lift_witness(tree: RootedTree, x: int) -> frozenset[int]:
    """Returns the transversal of the tree that stops being a transversal once x is lifted.

    Notes:
        The set holds p(x) and every leaf that is not a descendant of p(x). After lifting x above p(x), the leaves in
        the subtree of x are no longer covered.

    Raises:
        IndexError: If x is not a node of the tree.
        ValueError: If x is the root.
    """
    return _parent_witness(tree=tree, node=x, label="lift")


def shed_witness(tree: RootedTree, y: int) -> frozenset[int]:
    """Returns the transversal of the tree that has no preimage under shed_injection() for any shed onto y.

    Raises:
        IndexError: If y is not a node of the tree.
        ValueError: If y is the root.
    """
    return _parent_witness(tree=tree, node=y, label="shed")


def shed_injection(
    tree: RootedTree, tree_prime: RootedTree, x: int, y: int, s_prime: Iterable[int]
) -> frozenset[int]:
    """Maps a node set of the shed tree to a node set of the original tree of the same size.

    Notes:
        The set is returned unchanged if it meets the path from the root to y in the shed tree. Otherwise, x is
        replaced by y. Transversals of the shed tree map to transversals of the original tree, and the map is
        injective on them.

    Args:
        tree: The original tree T.
        tree_prime: The shed tree T'. It must equal shed(T, x, y).
        x: The node whose children were shed.
        y: The leaf that received the children.
        s_prime: A set of nodes of T'.

    Returns:
        The image of the input set.

    Raises:
        ValueError: If tree_prime is not the result of shedding x onto y in the original tree.
        IndexError: If the input set contains an identifier that is not a node of the tree.
    """
    if shed(tree, x, y) != tree_prime:
        message = (
            f"Unable to map the node set. The second tree is not the result of shedding node {x} onto node {y} in the "
            f"first tree."
        )
        console.error(message=message, error=ValueError)

    selected = frozenset(s_prime)
    for node in selected:
        tree_prime.verify_node(node)
    if selected.isdisjoint(tree_prime.root_path(y)):
        return (selected - {x}) | {y}
    return selected
