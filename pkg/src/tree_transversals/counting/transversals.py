"""Provides the exact transversal counters: the subset-enumeration oracle and the subtree polynomial counter used in
production, together with the binomial bounds that sandwich every count vector.

A transversal of a rooted tree is a set of nodes that meets every path from the root to a leaf. Node sets are
encoded as bitmasks wherever subsets are enumerated: bit i - 1 is set when node i belongs to the set.
"""

from __future__ import annotations

from math import comb
from typing import TYPE_CHECKING
from dataclasses import field, dataclass

import numpy as np
from ataraxis_base_utilities import console

if TYPE_CHECKING:
    from collections.abc import Iterator, Iterable

    from numpy.typing import NDArray

    from ..trees import RootedTree

ORACLE_LIMIT: int = 20
"""The default largest tree size accepted by the subset-enumeration oracle (2 ** 20 subsets)."""


@dataclass(frozen=True)
class CountVector:
    """Stores the exact transversal counts of a rooted tree, indexed by transversal size.

    Notes:
        The entry at index k stores c(T, k), the number of transversals of size k. Index 0 is stored explicitly (it is
        always 0 for a real tree) so that the vector can be indexed directly by k. The vector is deliberately not
        checked against the boundary identities, so the verification harness can be exercised with corrupted counters.

    Raises:
        ValueError: If the vector has fewer than two entries or contains a negative or non-integer entry.
    """

    coefficients: tuple[int, ...]
    """The exact counts c(T, 0), c(T, 1), ..., c(T, n)."""

    def __post_init__(self) -> None:
        """Verifies that the vector stores at least two non-negative integers."""
        if len(self.coefficients) < 2:  # noqa: PLR2004
            message = (
                f"Unable to build the count vector. A tree on n >= 1 nodes has n + 1 counts, but got "
                f"{len(self.coefficients)} values."
            )
            console.error(message=message, error=ValueError)
        for value in self.coefficients:
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                message = f"Unable to build the count vector. Counts must be non-negative integers, not {value!r}."
                console.error(message=message, error=ValueError)

    @classmethod
    def parse(cls, text: str) -> CountVector:
        """Parses the comma-separated decimal text format (for example, '0,1,5,9,5,1').

        Raises:
            ValueError: If a token is not a decimal integer or the parsed values do not form a valid count vector.
        """
        coefficients: list[int] = []
        for token in text.split(","):
            try:
                coefficients.append(int(token))
            except ValueError:
                message = f"Unable to parse the count vector text '{text}'. The token '{token}' is not an integer."
                console.error(message=message, error=ValueError)
        return cls(coefficients=tuple(coefficients))

    def __str__(self) -> str:
        """Returns the comma-separated decimal text format, lowest index first."""
        return ",".join(str(value) for value in self.coefficients)

    def __getitem__(self, k: int) -> int:
        """Returns c(T, k)."""
        return self.coefficients[k]

    def __len__(self) -> int:
        """Returns n + 1."""
        return len(self.coefficients)

    def __iter__(self) -> Iterator[int]:
        """Iterates over c(T, 0), ..., c(T, n)."""
        return iter(self.coefficients)

    @property
    def n(self) -> int:
        """Returns the number of nodes of the counted tree."""
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class SandwichCheck:
    """Stores the outcome of comparing a count vector against the binomial sandwich bounds for k = 1..n - 2."""

    holds: bool
    """Determines whether binom(n - 1, k - 1) <= c(T, k) <= binom(n, k) holds for every checked k."""
    all_upper_attained: bool
    """Determines whether c(T, k) = binom(n, k) for every checked k."""
    all_lower_attained: bool
    """Determines whether c(T, k) = binom(n - 1, k - 1) for every checked k."""
    lower_violations: tuple[int, ...] = field(default=())
    """The indices k at which the count falls below the lower bound."""
    upper_violations: tuple[int, ...] = field(default=())
    """The indices k at which the count exceeds the upper bound."""


def binomial(n: int, k: int) -> int:
    """Returns the exact binomial coefficient 'n choose k'.

    Raises:
        ValueError: If k is outside the 0..n range.
    """
    if not 0 <= k <= n:
        message = f"Unable to compute the binomial coefficient. Expected 0 <= k <= n, but got n={n} and k={k}."
        console.error(message=message, error=ValueError)
    return comb(n, k)


def is_transversal(tree: RootedTree, nodes: Iterable[int]) -> bool:
    """Returns True if the node set meets every path from the root to a leaf of the tree.

    Raises:
        IndexError: If a member of the node set is not a node of the tree.
    """
    selected = set(nodes)
    for node in selected:
        tree.verify_node(node)

    # A node is covered when it or one of its ancestors is selected. Preorder visits parents before children.
    covered = [False] * (tree.n + 1)
    for node in tree.preorder:
        parent = tree.parents[node - 1]
        covered[node] = node in selected or (parent != 0 and covered[parent])
    return all(covered[leaf] for leaf in tree.leaves)


def path_masks(tree: RootedTree) -> tuple[int, ...]:
    """Returns, for every leaf in ascending order, the bitmask of the nodes on its root-to-leaf path."""
    masks = [0] * (tree.n + 1)
    for node in tree.preorder:
        parent = tree.parents[node - 1]
        masks[node] = (masks[parent] if parent != 0 else 0) | (1 << (node - 1))
    return tuple(masks[leaf] for leaf in sorted(tree.leaves))


def subset_sizes(n: int) -> NDArray[np.uint8]:
    """Returns the size of every subset of n nodes, indexed by the subset's bitmask."""
    return np.bitwise_count(np.arange(1 << n, dtype=np.int64))


def _verify_oracle_size(tree: RootedTree, limit: int) -> None:
    """Ensures that the tree is small enough for subset enumeration.

    Raises:
        ValueError: If the tree has more nodes than the limit.
    """
    if tree.n > limit:
        message = (
            f"Unable to enumerate the subsets of a tree with {tree.n} nodes. The subset-enumeration oracle is limited "
            f"to trees with at most {limit} nodes."
        )
        console.error(message=message, error=ValueError)


def transversal_table(tree: RootedTree, limit: int = ORACLE_LIMIT) -> NDArray[np.bool_]:
    """Marks every subset of the tree's nodes that is a transversal.

    Args:
        tree: The tree whose subsets to classify.
        limit: The largest tree size to accept.

    Returns:
        A boolean array of length 2 ** n. The entry at index s is True if the node set encoded by the bitmask s is a
        transversal.

    Raises:
        ValueError: If the tree has more nodes than the limit.
    """
    _verify_oracle_size(tree=tree, limit=limit)
    subsets = np.arange(1 << tree.n, dtype=np.int64)
    table = np.ones(subsets.shape, dtype=np.bool_)
    for mask in path_masks(tree):
        table &= (subsets & mask) != 0
    return table


def count_by_enumeration(tree: RootedTree, limit: int = ORACLE_LIMIT) -> CountVector:
    """Counts transversals of every size by testing all 2 ** n node subsets.

    Notes:
        This is the reference oracle for count_transversals(). It is exponential in n and therefore limited to small
        trees.

    Args:
        tree: The tree whose transversals to count.
        limit: The largest tree size to accept.

    Returns:
        The CountVector of the tree.

    Raises:
        ValueError: If the tree has more nodes than the limit.
    """
    table = transversal_table(tree=tree, limit=limit)
    tallies = np.bincount(subset_sizes(tree.n)[table], minlength=tree.n + 1)
    return CountVector(coefficients=tuple(int(value) for value in tallies))


def _multiply(left: list[int], right: list[int]) -> list[int]:
    """Returns the product of two integer polynomials given as coefficient lists (lowest degree first)."""
    product = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a == 0:
            continue
        for j, b in enumerate(right):
            product[i + j] += a * b
    return product


def count_transversals(tree: RootedTree) -> CountVector:
    """Counts transversals of every size with the subtree polynomial recurrence.

    Notes:
        Every node v receives the polynomial P_v whose coefficient at x^k counts the size-k node sets of v's subtree
        that meet every path from v to a leaf below it. A leaf has P_v = x. An internal node has
        P_v = x * (1 + x) ** (size(v) - 1) + prod(P_w for children w): the first term counts the sets that contain v
        (any choice below v works), the second those that avoid v (each child subtree must then be covered on its own).
        The counts of the tree are the coefficients of the root polynomial. All arithmetic uses exact Python integers,
        and the polynomial degree never exceeds n.

    Args:
        tree: The tree whose transversals to count.

    Returns:
        The CountVector of the tree.
    """
    polynomials: dict[int, list[int]] = {}
    for node in reversed(tree.preorder):
        children = tree.children(node)
        if not children:
            polynomials[node] = [0, 1]
            continue

        avoiding = [1]
        for child in children:
            avoiding = _multiply(avoiding, polynomials.pop(child))

        size = tree.subtree_size(node)
        containing = [0, *(comb(size - 1, k) for k in range(size))]
        combined = containing.copy()
        for degree, value in enumerate(avoiding):
            combined[degree] += value
        polynomials[node] = combined

    root_polynomial = polynomials[tree.root]
    root_polynomial.extend([0] * (tree.n + 1 - len(root_polynomial)))
    return CountVector(coefficients=tuple(root_polynomial))


def sandwich_check(tree: RootedTree, vector: CountVector) -> SandwichCheck:
    """Compares the tree's count vector against binom(n - 1, k - 1) <= c(T, k) <= binom(n, k) for k = 1..n - 2.

    Args:
        tree: The counted tree.
        vector: The count vector of the tree.

    Returns:
        The SandwichCheck record. For n = 2 the checked range is empty, so every flag is vacuously True.

    Raises:
        ValueError: If the tree has fewer than 2 nodes or the vector was computed for a tree of a different size.
    """
    n = tree.n
    if n < 2:  # noqa: PLR2004
        message = f"Unable to check the sandwich bounds. The tree must have at least 2 nodes, but it has {n}."
        console.error(message=message, error=ValueError)
    if vector.n != n:
        message = f"Unable to check the sandwich bounds. The vector counts a {vector.n}-node tree, not a {n}-node tree."
        console.error(message=message, error=ValueError)

    checked = range(1, n - 1)
    lower = tuple(k for k in checked if vector[k] < binomial(n - 1, k - 1))
    upper = tuple(k for k in checked if vector[k] > binomial(n, k))
    return SandwichCheck(
        holds=not lower and not upper,
        all_upper_attained=all(vector[k] == binomial(n, k) for k in checked),
        all_lower_attained=all(vector[k] == binomial(n - 1, k - 1) for k in checked),
        lower_violations=lower,
        upper_violations=upper,
    )
