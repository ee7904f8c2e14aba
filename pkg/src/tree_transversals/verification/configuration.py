"""Provides the VerificationConfiguration class that stores the runtime parameters of the verification harness and
can be saved to and restored from a .yaml file.
"""

from dataclasses import dataclass

from ataraxis_data_structures import YamlConfig

from ..counting import ORACLE_LIMIT

DEFAULT_THEOREM_LIMIT: int = 11
"""The largest number of nodes used by the default exhaustive theorem checks."""
DEFAULT_LEMMA_LIMIT: int = 9
"""The largest number of nodes used by the default exhaustive lemma checks."""


@dataclass
class VerificationConfiguration(YamlConfig):
    """Stores the parameters that control how the harness runs, but never what it checks.

    Notes:
        None of these parameters affects report content, except for fail_fast, which truncates the violation list
        after the first violating tree in enumeration order.
    """

    jobs: int = 1
    """The number of worker processes. A value of 1 runs every check in the calling process."""
    chunk_size: int = 64
    """The number of trees bundled into each unit of work submitted to the workers."""
    fail_fast: bool = False
    """Determines whether to stop at the first violating tree instead of collecting all violations."""
    progress: bool = False
    """Determines whether to display a progress bar that tracks processed chunks."""
    oracle_limit: int = ORACLE_LIMIT
    """The largest tree size for which lemma checks enumerate all node subsets."""
