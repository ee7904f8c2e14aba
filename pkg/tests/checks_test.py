"""Contains tests for the exhaustive checks provided by the verification.checks module."""

import json
from collections.abc import Callable

import pytest

from tree_transversals.trees import RootedTree, TreeClassConstraint, make_path, class_count
from tree_transversals.counting import CountVector, count_transversals
from tree_transversals.verification import (
    DEFAULT_LEMMA_LIMIT,
    DEFAULT_THEOREM_LIMIT,
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


Counter = Callable[[RootedTree], CountVector]


def _corrupted_counter(tree: RootedTree) -> CountVector:
    """Counts correctly, except that c(T, n) is forced to 2."""
    coefficients = count_transversals(tree).coefficients
    return CountVector(coefficients=(*coefficients[:-1], 2))


def _flat_counter(tree: RootedTree) -> CountVector:
    """Returns the path's vector for every tree, so no alteration ever changes the counts."""
    return count_transversals(make_path(tree.n))


def test_boundary() -> None:
    """Verifies the boundary identities over every tree with 2 to 5 nodes."""
    report = verify_boundary(5)
    assert report.passed
    assert report.verdict == "pass"
    assert report.target is VerificationTarget.BOUNDARY
    assert report.trees_checked == 16
    assert verify_boundary(2).trees_checked == 1


def test_boundary_acceptance() -> None:
    """Verifies the boundary identities over every tree with at most 12 nodes."""
    report = verify_boundary(12)
    assert report.passed
    assert report.trees_checked == sum(class_count(TreeClassConstraint(n=n)) for n in range(2, 13))


def test_boundary_detects_corrupted_counter() -> None:
    """Verifies that a corrupted counter produces exactly one violation per tree."""
    report = verify_boundary(5, counter=_corrupted_counter)
    assert not report.passed
    assert report.verdict == "fail"
    assert len(report.violations) == report.trees_checked == 16
    sizes = [n for n in range(2, 6) for _ in range(class_count(TreeClassConstraint(n=n)))]
    assert [violation.k for violation in report.violations] == [(size,) for size in sizes]


def test_fail_fast() -> None:
    """Verifies that fail-fast stops at the first violating tree."""
    report = verify_boundary(5, counter=_corrupted_counter, fail_fast=True)
    assert report.trees_checked == 1
    assert len(report.violations) == 1
    assert report.violations[0].tree == "0 1"


def test_sandwich_and_attainment() -> None:
    """Verifies the sandwich bounds and both attainment characterizations."""
    assert verify_sandwich(10).passed
    report = verify_attainment(7)
    assert report.passed
    assert report.trees_checked == sum(class_count(TreeClassConstraint(n=n)) for n in range(3, 8))


def test_sandwich_acceptance() -> None:
    """Verifies the sandwich bounds over every tree with at most 12 nodes."""
    assert verify_sandwich(12).passed


def test_range_preconditions() -> None:
    """Verifies that the range targets reject bounds below their smallest meaningful tree size."""
    with pytest.raises(ValueError):
        verify_boundary(1)
    with pytest.raises(ValueError):
        verify_sandwich(2)
    with pytest.raises(ValueError):
        verify_attainment(2)
    with pytest.raises(ValueError):
        verify_lemmas(0)
    with pytest.raises(ValueError):
        verify_lemmas(6, configuration=VerificationConfiguration(oracle_limit=5))


@pytest.mark.parametrize("n, d, trees", [(5, 2, 6), (7, 2, None), (4, 3, 4)])
def test_theorem_main_examples(n: int, d: int, trees: int | None) -> None:
    """Verifies the children-bounded theorem on hand-checked classes."""
    report = verify_theorem_main(n, d)
    assert report.passed
    assert (report.n, report.d, report.m) == (n, d, None)
    if trees is not None:
        assert report.trees_checked == trees


@pytest.mark.parametrize("n, m, trees", [(5, 1, 1), (5, 3, 8), (6, 5, 20)])
def test_theorem_leaves_examples(n: int, m: int, trees: int) -> None:
    """Verifies the leaf-bounded theorem on hand-checked classes."""
    report = verify_theorem_leaves(n, m)
    assert report.passed
    assert report.trees_checked == trees
    assert (report.n, report.d, report.m) == (n, None, m)


def test_theorem_acceptance() -> None:
    """Verifies both theorems for every class with 3 to 11 nodes."""
    for n in range(3, DEFAULT_THEOREM_LIMIT + 1):
        for bound in range(1, n):
            main = verify_theorem_main(n, bound)
            leaves = verify_theorem_leaves(n, bound)
            assert main.passed, main.to_json()
            assert leaves.passed, leaves.to_json()
            assert main.trees_checked == class_count(TreeClassConstraint(n=n, max_children=bound))
            assert leaves.trees_checked == class_count(TreeClassConstraint(n=n, max_leaves=bound))


def test_theorem_detects_flat_counter() -> None:
    """Verifies that a counter that cannot separate trees breaks the theorem for every non-extremal tree."""
    report = verify_theorem_main(5, 2, counter=_flat_counter)
    assert not report.passed
    assert len(report.violations) == 5
    assert all(violation.other_tree == "0 1 1 2 2" for violation in report.violations)


def test_theorem_preconditions() -> None:
    """Verifies that the bounds must lie between 1 and n - 1."""
    with pytest.raises(ValueError):
        verify_theorem_main(5, 5)
    with pytest.raises(ValueError):
        verify_theorem_leaves(5, 0)


def test_lemmas_small_examples() -> None:
    """Verifies both lemmas over every tree with at most 5 nodes."""
    report = verify_lemmas(5)
    assert report.passed
    assert report.target is VerificationTarget.LEMMAS
    assert report.trees_checked == 1 + 1 + 2 + 4 + 9
    assert report.pairs_checked > 0


def test_lemma_targets_split_the_pairs() -> None:
    """Verifies that the combined run checks the lift pairs and the shed pairs of the separate runs."""
    lift_report = verify_lemma_lift(6)
    shed_report = verify_lemma_shed(6)
    injectivity_report = verify_shed_injectivity(6)
    combined = verify_lemmas(6)
    assert lift_report.passed
    assert shed_report.passed
    assert injectivity_report.passed
    assert shed_report.pairs_checked == injectivity_report.pairs_checked
    assert combined.pairs_checked == lift_report.pairs_checked + shed_report.pairs_checked


def test_lemmas_acceptance() -> None:
    """Verifies both lemmas and all proof constructions over every tree with at most 9 nodes."""
    report = verify_lemmas(DEFAULT_LEMMA_LIMIT)
    assert report.passed, report.to_json()


def test_lemmas_detect_flat_counter() -> None:
    """Verifies that strict dominance failures are reported with both trees."""
    report = verify_lemma_lift(3, counter=_flat_counter)
    assert not report.passed
    assert len(report.violations) == 1
    violation = report.violations[0]
    assert violation.tree == "0 1 2"
    assert violation.other_tree == "0 1 1"
    assert "lift(3, 1)" in violation.detail


def test_descent() -> None:
    """Verifies that every non-extremal tree of every small class has an improving class-preserving step."""
    for n in range(2, 9):
        for bound in range(1, n):
            assert verify_descent(n, d=bound).passed
            assert verify_descent(n, m=bound).passed


def test_descent_preconditions() -> None:
    """Verifies that exactly one bound must be given."""
    with pytest.raises(ValueError):
        verify_descent(5)
    with pytest.raises(ValueError):
        verify_descent(5, d=2, m=2)


def test_reports_are_deterministic_across_workers() -> None:
    """Verifies that the report content does not depend on the number of workers or the chunk size."""
    sequential = json.loads(verify_theorem_main(9, 2).to_json())
    parallel = json.loads(verify_theorem_main(9, 2, jobs=4, chunk_size=7).to_json())
    sequential.pop("elapsed_ms")
    parallel.pop("elapsed_ms")
    assert sequential == parallel


def test_configuration_overrides() -> None:
    """Verifies that keyword arguments override the values of the supplied configuration."""
    configuration = VerificationConfiguration(fail_fast=True)
    report = verify_boundary(4, counter=_corrupted_counter, configuration=configuration)
    assert report.trees_checked == 1
    report = verify_boundary(4, counter=_corrupted_counter, configuration=configuration, fail_fast=False)
    assert report.trees_checked == 7


@pytest.mark.parametrize(
    "run, counter",
    [
        (lambda counter: verify_boundary(5, counter=counter), _corrupted_counter),
        (lambda counter: verify_sandwich(5, counter=counter), _flat_counter),
        (lambda counter: verify_theorem_main(6, 2, counter=counter), _flat_counter),
        (lambda counter: verify_lemma_shed(5, counter=counter), _flat_counter),
    ],
)
def test_violations_can_be_replayed(run: Callable[[Counter], VerificationReport], counter: Counter) -> None:
    """Verifies that recounting the trees named by each violation reproduces the vectors recorded in its detail."""
    report = run(counter)
    assert report.violations
    for violation in report.violations:
        assert str(counter(RootedTree.from_text(violation.tree))) in violation.detail
        if violation.other_tree is not None:
            assert str(counter(RootedTree.from_text(violation.other_tree))) in violation.detail
