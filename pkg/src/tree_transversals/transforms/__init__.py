"""This package provides the lift and shed tree alterations, their witness transversals, and the injection used to
prove that shedding strictly decreases the count vector.
"""

from .witnesses import lift_witness, shed_witness, shed_injection
from .alterations import (
    TransformKind,
    TransformStep,
    TransformError,
    lift,
    shed,
    apply_step,
    valid_lift_pairs,
    valid_shed_pairs,
    class_preserving_steps,
)

__all__ = [
    "TransformError",
    "TransformKind",
    "TransformStep",
    "apply_step",
    "class_preserving_steps",
    "lift",
    "lift_witness",
    "shed",
    "shed_injection",
    "shed_witness",
    "valid_lift_pairs",
    "valid_shed_pairs",
]
