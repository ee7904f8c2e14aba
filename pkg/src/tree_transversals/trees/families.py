"""Provides the constructors for the named tree families: paths, stars, full caterpillars of a given degree, and the
leaf-bounded caterpillars.

All constructors number the spine first, so the output is a fixed parent array for every valid input. Any isomorphic
relabeling of these trees is equally valid; callers that compare trees should use RootedTree.canonical_code().
"""

from math import ceil

from ataraxis_base_utilities import console

from .rooted_tree import ROOT_SENTINEL, RootedTree


def make_path(n: int) -> RootedTree:
    """Builds the path on n nodes, where node i + 1 is the only child of node i.

    Args:
        n: The number of nodes. Must be at least 1.

    Raises:
        ValueError: If n is less than 1.
    """
    if n < 1:
        message = f"Unable to build the path. The number of nodes must be at least 1, but got {n}."
        console.error(message=message, error=ValueError)
    return RootedTree(parents=(ROOT_SENTINEL, *range(1, n)))


def make_star(n: int) -> RootedTree:
    """Builds the star on n nodes, where nodes 2..n are the children of the root (node 1).

    Args:
        n: The number of nodes. Must be at least 2.

    Raises:
        ValueError: If n is less than 2.
    """
    if n < 2:  # noqa: PLR2004
        message = f"Unable to build the star. The number of nodes must be at least 2, but got {n}."
        console.error(message=message, error=ValueError)
    return RootedTree(parents=(ROOT_SENTINEL, *([1] * (n - 1))))


def make_full_caterpillar(n: int, d: int) -> RootedTree:
    """Builds the full caterpillar of degree d on n nodes.

    Notes:
        The spine consists of t = ceil((n - 1) / d) nodes numbered 1..t, with node i + 1 the child of node i. Each
        spine node other than the last one carries d - 1 leaves, and the last spine node carries the remaining
        r = (n - 1) - d * (t - 1) leaves, where 1 <= r <= d. Leaves are numbered t + 1..n, grouped by parent in spine
        order.

    Args:
        n: The number of nodes.
        d: The number of children of every internal node other than the lowest one. Must satisfy 1 <= d < n.

    Raises:
        ValueError: If d is not between 1 and n - 1.
    """
    if not 1 <= d < n:
        message = (
            f"Unable to build the full caterpillar of degree {d} on {n} nodes. The degree must be between 1 and "
            f"{n - 1}."
        )
        console.error(message=message, error=ValueError)

    spine_length = ceil((n - 1) / d)
    remainder = (n - 1) - d * (spine_length - 1)

    parents = [ROOT_SENTINEL, *range(1, spine_length)]
    for spine_node in range(1, spine_length):
        parents.extend([spine_node] * (d - 1))
    parents.extend([spine_length] * remainder)
    return RootedTree(parents=tuple(parents))


def make_leaf_caterpillar(n: int, m: int) -> RootedTree:
    """Builds the caterpillar on n nodes whose root has m children and whose other nodes have at most one child.

    Notes:
        The root (node 1) has children 2..m + 1. Nodes m + 2..n form a descending path attached under node 2, so the
        tree has exactly m leaves.

    Args:
        n: The number of nodes.
        m: The number of leaves (and root children). Must satisfy 1 <= m < n.

    Raises:
        ValueError: If m is not between 1 and n - 1.
    """
    if not 1 <= m < n:
        message = (
            f"Unable to build the leaf-bounded caterpillar with {m} leaves on {n} nodes. The number of leaves must be "
            f"between 1 and {n - 1}."
        )
        console.error(message=message, error=ValueError)

    parents = [ROOT_SENTINEL, *([1] * m)]
    previous = 2
    for node in range(m + 2, n + 1):
        parents.append(previous)
        previous = node
    return RootedTree(parents=tuple(parents))
