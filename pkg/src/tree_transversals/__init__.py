"""A Python library that counts the transversals of rooted trees exactly, builds the extremal caterpillar families, and
exhaustively verifies the dominance theorems that single them out.

Most users interact with the library through the 'transversals' CLI command exposed by installing the library into a
Python environment. The counting, tree, alteration, and verification APIs are also exported below for use in scripts.
"""

from ataraxis_base_utilities import console

from .trees import (
    CycleError,
    RootedTree,
    RootCountError,
    ParentRangeError,
    TreeClassConstraint,
    to_dot,
    validate,
    make_path,
    make_star,
    class_count,
    rooted_trees,
    parse_parent_text,
    format_parent_text,
    make_leaf_caterpillar,
    make_full_caterpillar,
)
from .counting import (
    CountVector,
    SandwichCheck,
    DominanceVerdict,
    DominanceRelation,
    binomial,
    dominance,
    is_transversal,
    sandwich_check,
    count_transversals,
    count_by_enumeration,
)
from .transforms import (
    TransformKind,
    TransformStep,
    TransformError,
    lift,
    shed,
    apply_step,
    lift_witness,
    shed_witness,
    shed_injection,
    valid_lift_pairs,
    valid_shed_pairs,
    class_preserving_steps,
)
from .verification import (
    VerificationTarget,
    VerificationReport,
    VerificationConfiguration,
    verify_lemmas,
    verify_descent,
    verify_boundary,
    verify_sandwich,
    verify_attainment,
    verify_lemma_lift,
    verify_lemma_shed,
    verify_theorem_main,
    verify_theorem_leaves,
    verify_shed_injectivity,
)

# Ensures the console is enabled whenever this library is imported.
if not console.enabled:
    console.enable()

__all__ = [
    "CountVector",
    "CycleError",
    "DominanceRelation",
    "DominanceVerdict",
    "ParentRangeError",
    "RootCountError",
    "RootedTree",
    "SandwichCheck",
    "TransformError",
    "TransformKind",
    "TransformStep",
    "TreeClassConstraint",
    "VerificationConfiguration",
    "VerificationReport",
    "VerificationTarget",
    "apply_step",
    "binomial",
    "class_count",
    "class_preserving_steps",
    "count_by_enumeration",
    "count_transversals",
    "dominance",
    "format_parent_text",
    "is_transversal",
    "lift",
    "lift_witness",
    "make_full_caterpillar",
    "make_leaf_caterpillar",
    "make_path",
    "make_star",
    "parse_parent_text",
    "rooted_trees",
    "sandwich_check",
    "shed",
    "shed_injection",
    "shed_witness",
    "to_dot",
    "valid_lift_pairs",
    "valid_shed_pairs",
    "validate",
    "verify_attainment",
    "verify_boundary",
    "verify_descent",
    "verify_lemma_lift",
    "verify_lemma_shed",
    "verify_lemmas",
    "verify_sandwich",
    "verify_shed_injectivity",
    "verify_theorem_leaves",
    "verify_theorem_main",
]
