"""This package provides the exhaustive verification harness and the checks it runs over enumerated tree classes."""

from .checks import (
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
from .harness import ChunkOutcome, check_chunk, run_verification
from .reports import Violation, VerificationTarget, VerificationReport
from .configuration import DEFAULT_LEMMA_LIMIT, DEFAULT_THEOREM_LIMIT, VerificationConfiguration

__all__ = [
    "DEFAULT_LEMMA_LIMIT",
    "DEFAULT_THEOREM_LIMIT",
    "ChunkOutcome",
    "VerificationConfiguration",
    "VerificationReport",
    "VerificationTarget",
    "Violation",
    "check_chunk",
    "run_verification",
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
