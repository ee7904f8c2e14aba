"""Provides the componentwise dominance comparison of two count vectors."""

from __future__ import annotations

from enum import StrEnum
from typing import TYPE_CHECKING
from dataclasses import dataclass

from ataraxis_base_utilities import console

if TYPE_CHECKING:
    from .transversals import CountVector


class DominanceRelation(StrEnum):
    """Defines the four possible outcomes of comparing two count vectors A and B entry by entry."""

    STRICTLY_SUCCEEDS = "strictly_succeeds"
    """A[k] >= B[k] for every k and A[k] > B[k] for at least one k."""
    EQUAL = "equal"
    """A[k] == B[k] for every k."""
    STRICTLY_PRECEDED = "strictly_preceded"
    """A[k] <= B[k] for every k and A[k] < B[k] for at least one k."""
    INCOMPARABLE = "incomparable"
    """A[k] > B[k] for some k and A[k] < B[k] for some other k."""


@dataclass(frozen=True)
class DominanceVerdict:
    """Stores the relation between two count vectors and the indices at which they differ."""

    relation: DominanceRelation
    """The dominance relation of the first vector to the second."""
    strict_indices: tuple[int, ...]
    """The ascending indices k at which the two vectors differ. Empty if and only if the vectors are equal."""


def dominance(first: CountVector, second: CountVector) -> DominanceVerdict:
    """Compares two count vectors of trees with the same number of nodes.

    Args:
        first: The vector A.
        second: The vector B.

    Returns:
        The DominanceVerdict describing how A relates to B.

    Raises:
        ValueError: If the vectors count trees of different sizes.
    """
    if first.n != second.n:
        message = (
            f"Unable to compare the count vectors. Both vectors must count trees with the same number of nodes, but "
            f"got n={first.n} and n={second.n}."
        )
        console.error(message=message, error=ValueError)

    strict = tuple(k for k, (a, b) in enumerate(zip(first, second, strict=True)) if a != b)
    greater = any(first[k] > second[k] for k in strict)
    smaller = any(first[k] < second[k] for k in strict)

    if greater and smaller:
        relation = DominanceRelation.INCOMPARABLE
    elif greater:
        relation = DominanceRelation.STRICTLY_SUCCEEDS
    elif smaller:
        relation = DominanceRelation.STRICTLY_PRECEDED
    else:
        relation = DominanceRelation.EQUAL
    return DominanceVerdict(relation=relation, strict_indices=strict)
