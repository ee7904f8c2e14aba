"""This package provides the exact transversal counters, the binomial sandwich bounds, and the dominance comparison of
count vectors.
"""

from .dominance import DominanceVerdict, DominanceRelation, dominance
from .transversals import (
    ORACLE_LIMIT,
    CountVector,
    SandwichCheck,
    binomial,
    path_masks,
    subset_sizes,
    is_transversal,
    sandwich_check,
    transversal_table,
    count_transversals,
    count_by_enumeration,
)

__all__ = [
    "ORACLE_LIMIT",
    "CountVector",
    "DominanceRelation",
    "DominanceVerdict",
    "SandwichCheck",
    "binomial",
    "count_by_enumeration",
    "count_transversals",
    "dominance",
    "is_transversal",
    "path_masks",
    "sandwich_check",
    "subset_sizes",
    "transversal_table",
]
