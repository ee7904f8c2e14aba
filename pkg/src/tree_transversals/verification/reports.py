"""Provides the VerificationReport record produced by every exhaustive check, together with its JSON and tabular
renderings.
"""

import json
from enum import StrEnum
from typing import Any
from dataclasses import field, dataclass

from tabulate import tabulate


class VerificationTarget(StrEnum):
    """Defines the statements that the verification harness can check."""

    BOUNDARY = "boundary"
    """c(T, n) = 1 and c(T, n - 1) = n for every tree."""
    SANDWICH = "sandwich"
    """The binomial sandwich bounds and both attainment characterizations."""
    ATTAINMENT = "attainment"
    """Only the two attainment characterizations of the sandwich bounds."""
    THEOREM_MAIN = "theorem_main"
    """Every tree with at most d children per node strictly dominates or is the full caterpillar of degree d."""
    THEOREM_LEAVES = "theorem_leaves"
    """Every tree with at most m leaves strictly dominates or is the caterpillar whose root has m children."""
    LEMMA_LIFT = "lemma_lift"
    """Lift strictly decreases the count vector, keeps every transversal, and breaks the lift witness."""
    LEMMA_SHED = "lemma_shed"
    """Shed strictly decreases the count vector and the shed witness has no preimage."""
    SHED_INJECTIVITY = "shed_injectivity"
    """The shed injection maps transversals to equal-size transversals without collisions."""
    LEMMAS = "lemmas"
    """All three lemma checks in one pass."""
    DESCENT = "descent"
    """Every non-extremal tree of a class has a class-preserving improving step."""


@dataclass(frozen=True)
class Violation:
    """Stores a single counterexample found by the harness."""

    tree: str
    """The offending tree in the parent array text format."""
    other_tree: str | None = None
    """The second tree involved in the violation (the altered tree or the extremal caterpillar), if any."""
    k: tuple[int, ...] = ()
    """The transversal sizes at which the violation was observed."""
    detail: str = ""
    """The human-readable description of the expected and found values."""

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON-compatible representation of the violation."""
        return {"tree": self.tree, "other_tree": self.other_tree, "k": list(self.k), "detail": self.detail}


@dataclass
class VerificationReport:
    """Summarizes one exhaustive verification run.

    Notes:
        The report content depends only on the run parameters, never on the number of workers or on timing, except for
        the elapsed_ms field.
    """

    target: VerificationTarget
    """The checked statement."""
    n: int
    """The number of nodes, or the largest number of nodes for targets that sweep a size range."""
    d: int | None = None
    """The bound on the number of children, for targets that use it."""
    m: int | None = None
    """The bound on the number of leaves, for targets that use it."""
    trees_checked: int = 0
    """The number of enumerated trees."""
    pairs_checked: int = 0
    """The number of checked (x, y) alteration pairs or descent steps."""
    violations: list[Violation] = field(default_factory=list)
    """The counterexamples, in enumeration stream order."""
    elapsed_ms: int = 0
    """The wall-clock duration of the run in milliseconds."""

    @property
    def verdict(self) -> str:
        """Returns 'pass' if the run found no violations and 'fail' otherwise."""
        return "fail" if self.violations else "pass"

    @property
    def passed(self) -> bool:
        """Returns True if the run found no violations."""
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON-compatible representation of the report with keys in the documented order."""
        return {
            "target": str(self.target),
            "params": {"n": self.n, "d": self.d, "m": self.m},
            "trees_checked": self.trees_checked,
            "pairs_checked": self.pairs_checked,
            "violations": [violation.to_dict() for violation in self.violations],
            "elapsed_ms": self.elapsed_ms,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        """Serializes the report to indented JSON text."""
        return json.dumps(self.to_dict(), indent=2)

    def summary_table(self) -> str:
        """Renders the report parameters and outcome as a two-column table for terminal output."""
        rows = [
            ("target", str(self.target)),
            ("n", self.n),
            ("d", "-" if self.d is None else self.d),
            ("m", "-" if self.m is None else self.m),
            ("trees checked", self.trees_checked),
            ("pairs checked", self.pairs_checked),
            ("violations", len(self.violations)),
            ("elapsed (ms)", self.elapsed_ms),
            ("verdict", self.verdict),
        ]
        return tabulate(rows, headers=("field", "value"), tablefmt="simple")
