"""Provides the RootedTree class that stores a rooted tree as a parent array and answers the structural queries used
by the counting, transformation, and verification packages.
"""

from __future__ import annotations

from typing import TYPE_CHECKING
from dataclasses import dataclass
from functools import cached_property

from ataraxis_base_utilities import console

if TYPE_CHECKING:
    from collections.abc import Sequence

ROOT_SENTINEL: int = 0
"""The parent array value that marks the root of the tree. Node identifiers are 1-based, so 0 is never a valid node."""


class RootCountError(ValueError):
    """Raised when a parent array marks zero or more than one node as the root."""


class ParentRangeError(ValueError):
    """Raised when a parent array is empty, contains a non-integer entry, or names a parent outside the node range."""


class CycleError(ValueError):
    """Raised when following parent links from some node revisits a node before reaching the root."""


@dataclass(frozen=True)
class RootedTree:
    """Stores a rooted tree as an immutable parent array.

    Notes:
        Node identifiers are 1-based. The entry at index i - 1 of the parent array stores the parent of node i, and the
        root's entry stores ROOT_SENTINEL (0). The array does not need to be topologically ordered: a child may have a
        smaller identifier than its parent.

        All derived structures (children lists, traversal orders, subtree sizes) are computed lazily on first access and
        cached on the instance. Caching has no observable effect on any query result, so instances remain safe to share
        between workers.

    Raises:
        ParentRangeError: If the parent array is empty, contains a non-integer entry, or names an out-of-range parent.
        RootCountError: If the parent array does not contain exactly one root.
        CycleError: If the parent links contain a cycle.
    """

    parents: tuple[int, ...]
    """The parent array. Entry i - 1 is the parent of node i, or ROOT_SENTINEL for the root."""

    def __post_init__(self) -> None:
        """Verifies that the parent array describes a valid rooted tree."""
        count = len(self.parents)
        if count == 0:
            message = "Unable to build the rooted tree. The parent array must contain at least one node."
            console.error(message=message, error=ParentRangeError)

        # Range check. Booleans are rejected explicitly, as they pass the isinstance(int) check.
        for node, parent in enumerate(self.parents, start=1):
            if isinstance(parent, bool) or not isinstance(parent, int) or not 0 <= parent <= count:
                message = (
                    f"Unable to build the rooted tree. Node {node} names the parent {parent!r}, which is not a valid "
                    f"node identifier (expected an integer between 1 and {count}, or {ROOT_SENTINEL} for the root)."
                )
                console.error(message=message, error=ParentRangeError)

        roots = [node for node, parent in enumerate(self.parents, start=1) if parent == ROOT_SENTINEL]
        if len(roots) != 1:
            message = (
                f"Unable to build the rooted tree. The parent array must mark exactly one root with {ROOT_SENTINEL}, "
                f"but it marks {len(roots)} roots: {roots}."
            )
            console.error(message=message, error=RootCountError)

        # Walks every node up towards the root. Nodes already known to reach the root terminate the walk early, which
        # keeps the check linear in the number of nodes.
        reaches_root = [False] * (count + 1)
        reaches_root[roots[0]] = True
        for start in range(1, count + 1):
            path: list[int] = []
            on_path: set[int] = set()
            node = start
            while not reaches_root[node]:
                if node in on_path:
                    message = (
                        f"Unable to build the rooted tree. Following the parent links from node {start} revisits "
                        f"node {node} before reaching the root."
                    )
                    console.error(message=message, error=CycleError)
                path.append(node)
                on_path.add(node)
                node = self.parents[node - 1]
            for visited in path:
                reaches_root[visited] = True

    @classmethod
    def from_text(cls, text: str) -> RootedTree:
        """Parses the whitespace-separated parent array text format (for example, '0 1 1 2 2').

        Args:
            text: The text to parse. Entry i is the parent of node i, and exactly one entry must be 0.

        Returns:
            The parsed and validated RootedTree instance.

        Raises:
            ParentRangeError: If a token is not an integer or the text contains no tokens.
        """
        tokens = text.split()
        parents: list[int] = []
        for token in tokens:
            try:
                parents.append(int(token))
            except ValueError:
                message = f"Unable to parse the parent array text '{text}'. The token '{token}' is not an integer."
                console.error(message=message, error=ParentRangeError)
        return cls(parents=tuple(parents))

    def to_text(self) -> str:
        """Returns the parent array in the whitespace-separated text format."""
        return " ".join(str(parent) for parent in self.parents)

    @property
    def n(self) -> int:
        """Returns the number of nodes in the tree."""
        return len(self.parents)

    @cached_property
    def root(self) -> int:
        """Returns the identifier of the root node."""
        return self.parents.index(ROOT_SENTINEL) + 1

    @cached_property
    def _children_table(self) -> tuple[tuple[int, ...], ...]:
        """Stores the ascending children of every node, indexed by node identifier (index 0 is unused)."""
        table: list[list[int]] = [[] for _ in range(self.n + 1)]
        for node, parent in enumerate(self.parents, start=1):
            if parent != ROOT_SENTINEL:
                table[parent].append(node)
        return tuple(tuple(children) for children in table)

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        """Returns all nodes in depth-first preorder, visiting children in ascending identifier order."""
        order: list[int] = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            order.append(node)
            stack.extend(reversed(self._children_table[node]))
        return tuple(order)

    @cached_property
    def _subtree_sizes(self) -> tuple[int, ...]:
        """Stores the subtree size of every node, indexed by node identifier (index 0 is unused)."""
        sizes = [1] * (self.n + 1)
        sizes[0] = 0
        for node in reversed(self.preorder):
            parent = self.parents[node - 1]
            if parent != ROOT_SENTINEL:
                sizes[parent] += sizes[node]
        return tuple(sizes)

    @cached_property
    def _depths(self) -> tuple[int, ...]:
        """Stores the depth of every node (the root has depth 0), indexed by node identifier."""
        depths = [0] * (self.n + 1)
        for node in self.preorder:
            parent = self.parents[node - 1]
            if parent != ROOT_SENTINEL:
                depths[node] = depths[parent] + 1
        return tuple(depths)

    def verify_node(self, node: int) -> None:
        """Ensures that the input node identifier belongs to the tree.

        Raises:
            IndexError: If the node identifier is outside the 1..n range.
        """
        if isinstance(node, bool) or not isinstance(node, int) or not 1 <= node <= self.n:
            message = f"Unable to query node {node!r}. Valid node identifiers for this tree are 1 to {self.n}."
            console.error(message=message, error=IndexError)

    def parent(self, node: int) -> int:
        """Returns the parent of the input node, or ROOT_SENTINEL if the node is the root."""
        self.verify_node(node)
        return self.parents[node - 1]

    def children(self, node: int) -> tuple[int, ...]:
        """Returns the children of the input node in ascending identifier order."""
        self.verify_node(node)
        return self._children_table[node]

    def is_leaf(self, node: int) -> bool:
        """Returns True if the input node has no children.

        Notes:
            The root of the single-node tree is a leaf.
        """
        self.verify_node(node)
        return not self._children_table[node]

    @cached_property
    def leaves(self) -> frozenset[int]:
        """Returns the set of all leaf nodes."""
        return frozenset(node for node in range(1, self.n + 1) if not self._children_table[node])

    @property
    def leaf_count(self) -> int:
        """Returns the number of leaves."""
        return len(self.leaves)

    @cached_property
    def max_children(self) -> int:
        """Returns the largest number of children of any node (0 for the single-node tree)."""
        return max(len(children) for children in self._children_table)

    def depth(self, node: int) -> int:
        """Returns the number of edges between the root and the input node."""
        self.verify_node(node)
        return self._depths[node]

    def root_path(self, node: int) -> tuple[int, ...]:
        """Returns the nodes on the path from the root to the input node, both ends included, in root-first order."""
        self.verify_node(node)
        path = [node]
        while self.parents[path[-1] - 1] != ROOT_SENTINEL:
            path.append(self.parents[path[-1] - 1])
        return tuple(reversed(path))

    def is_proper_ancestor(self, ancestor: int, node: int) -> bool:
        """Returns True if the ancestor differs from the node and lies on the path from the root to the node."""
        self.verify_node(ancestor)
        self.verify_node(node)
        if ancestor == node:
            return False
        current = self.parents[node - 1]
        while current != ROOT_SENTINEL:
            if current == ancestor:
                return True
            current = self.parents[current - 1]
        return False

    def descendants(self, node: int) -> frozenset[int]:
        """Returns the set of all descendants of the input node. Every node is a descendant of itself."""
        self.verify_node(node)
        found: list[int] = []
        stack = [node]
        while stack:
            current = stack.pop()
            found.append(current)
            stack.extend(self._children_table[current])
        return frozenset(found)

    def subtree_size(self, node: int) -> int:
        """Returns the number of nodes in the subtree rooted at the input node."""
        self.verify_node(node)
        return self._subtree_sizes[node]

    def siblings(self, node: int) -> tuple[int, ...]:
        """Returns the other children of the input node's parent in ascending order (empty for the root)."""
        self.verify_node(node)
        parent = self.parents[node - 1]
        if parent == ROOT_SENTINEL:
            return ()
        return tuple(child for child in self._children_table[parent] if child != node)

    def has_internal_siblings(self) -> bool:
        """Returns True if two distinct internal nodes share the same parent."""
        for children in self._children_table:
            internal = sum(1 for child in children if self._children_table[child])
            if internal > 1:
                return True
        return False

    def is_caterpillar(self) -> bool:
        """Returns True if removing all leaves leaves a rooted tree with exactly one leaf.

        Notes:
            Trees with at most two nodes are caterpillars by convention. For all other trees, the internal nodes form a
            rooted tree whose leaves are the internal nodes without internal children, so the tree is a caterpillar
            exactly when one such node exists.
        """
        if self.n <= 2:  # noqa: PLR2004
            return True
        table = self._children_table
        lowest = [
            node for node in range(1, self.n + 1) if table[node] and not any(table[child] for child in table[node])
        ]
        return len(lowest) == 1

    def is_full_caterpillar(self, degree: int) -> bool:
        """Returns True if the tree is a caterpillar whose internal nodes, except possibly the lowest one, have exactly
        'degree' children.

        Notes:
            The lowest internal node must have between 1 and 'degree' children. The single-node tree has no internal
            nodes and is never a full caterpillar.

        Args:
            degree: The number of children every non-lowest internal node must have.
        """
        if self.n == 1 or not self.is_caterpillar():
            return False
        internal = [node for node in range(1, self.n + 1) if self._children_table[node]]
        lowest = max(internal, key=lambda node: self._depths[node])
        for node in internal:
            count = len(self._children_table[node])
            if node == lowest:
                if count > degree:
                    return False
            elif count != degree:
                return False
        return True

    def canonical_code(self) -> str:
        """Returns the parenthesis code of the tree, which is equal for two trees exactly when they are isomorphic.

        Notes:
            A leaf is encoded as '()'. An internal node is encoded as '(' followed by the lexicographically sorted codes
            of its children and ')'.
        """
        codes: list[str] = [""] * (self.n + 1)
        for node in reversed(self.preorder):
            codes[node] = "(" + "".join(sorted(codes[child] for child in self._children_table[node])) + ")"
        return codes[self.root]

    def relabel(self, permutation: Sequence[int]) -> RootedTree:
        """Returns the isomorphic tree in which node i of this tree is renamed to permutation[i - 1].

        Args:
            permutation: A permutation of the node identifiers 1..n.

        Raises:
            ValueError: If the input sequence is not a permutation of 1..n.
        """
        if sorted(permutation) != list(range(1, self.n + 1)):
            message = (
                f"Unable to relabel the tree. The relabeling must be a permutation of the node identifiers 1 to "
                f"{self.n}, but got {list(permutation)}."
            )
            console.error(message=message, error=ValueError)
        parents = [ROOT_SENTINEL] * self.n
        for node, parent in enumerate(self.parents, start=1):
            parents[permutation[node - 1] - 1] = ROOT_SENTINEL if parent == ROOT_SENTINEL else permutation[parent - 1]
        return RootedTree(parents=tuple(parents))


def validate(parent_array: Sequence[int]) -> RootedTree:
    """Validates the input parent array and wraps it into a RootedTree instance.

    Args:
        parent_array: The parent array to validate. Entry i - 1 is the parent of node i, and the root is marked with 0.

    Returns:
        The validated RootedTree instance.

    Raises:
        ParentRangeError: If the array is empty or names an out-of-range parent.
        RootCountError: If the array does not mark exactly one root.
        CycleError: If the parent links contain a cycle.
    """
    return RootedTree(parents=tuple(parent_array))


def parse_parent_text(text: str) -> RootedTree:
    """Parses the whitespace-separated parent array text format into a validated RootedTree."""
    return RootedTree.from_text(text)


def format_parent_text(tree: RootedTree) -> str:
    """Formats the tree's parent array as whitespace-separated text."""
    return tree.to_text()
