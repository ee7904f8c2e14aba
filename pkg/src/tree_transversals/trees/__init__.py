"""This package provides the rooted tree data model, the constructors for the named tree families, the Graphviz
renderer, and the exhaustive generator of rooted trees up to isomorphism.
"""

from .families import make_path, make_star, make_leaf_caterpillar, make_full_caterpillar
from .rendering import to_dot
from .enumeration import TreeClassConstraint, class_count, rooted_trees
from .rooted_tree import (
    ROOT_SENTINEL,
    CycleError,
    RootedTree,
    RootCountError,
    ParentRangeError,
    validate,
    parse_parent_text,
    format_parent_text,
)

__all__ = [
    "ROOT_SENTINEL",
    "CycleError",
    "ParentRangeError",
    "RootCountError",
    "RootedTree",
    "TreeClassConstraint",
    "class_count",
    "format_parent_text",
    "make_full_caterpillar",
    "make_leaf_caterpillar",
    "make_path",
    "make_star",
    "parse_parent_text",
    "rooted_trees",
    "to_dot",
    "validate",
]
