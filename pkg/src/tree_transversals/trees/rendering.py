"""Provides the Graphviz DOT renderer used by the CLI '--emit dot' option."""

from .rooted_tree import ROOT_SENTINEL, RootedTree


def to_dot(tree: RootedTree, name: str = "T") -> str:
    """Renders the tree as a Graphviz digraph.

    Notes:
        Leaves are drawn as boxes and internal nodes as circles. Edges point from each parent to its child and are
        listed in ascending child order, so the output is stable for a given parent array.

    Args:
        tree: The tree to render.
        name: The graph identifier written after the 'digraph' keyword.

    Returns:
        The DOT source text, terminated by a newline.
    """
    lines = [f"digraph {name} {{"]
    for node in range(1, tree.n + 1):
        shape = "box" if tree.is_leaf(node) else "circle"
        lines.append(f'    {node} [label="{node}", shape={shape}];')
    lines.extend(
        f"    {parent} -> {node};" for node, parent in enumerate(tree.parents, start=1) if parent != ROOT_SENTINEL
    )
    lines.append("}")
    return "\n".join(lines) + "\n"
