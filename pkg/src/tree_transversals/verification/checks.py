"""Provides the exhaustive checks of the boundary identities, the sandwich bounds, both extremal theorems, both lemmas,
and the descent structure of the theorem proofs.

Every public function enumerates the relevant tree classes, runs a per-tree check through the harness, and returns a
VerificationReport. Per-tree checks are module-level functions bound with functools.partial, so they can be shipped to
worker processes.
"""

from __future__ import annotations

from typing import TYPE_CHECKING
from functools import partial
from itertools import chain

import numpy as np
from ataraxis_base_utilities import console

from ..trees import (
    TreeClassConstraint,
    rooted_trees,
    make_leaf_caterpillar,
    make_full_caterpillar,
)
from .reports import Violation, VerificationTarget
from .harness import run_verification
from ..counting import (
    DominanceRelation,
    dominance,
    subset_sizes,
    sandwich_check,
    transversal_table,
    count_transversals,
)
from ..transforms import (
    lift,
    shed,
    lift_witness,
    shed_witness,
    valid_lift_pairs,
    valid_shed_pairs,
    class_preserving_steps,
)
from .configuration import VerificationConfiguration

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Iterable

    from numpy.typing import NDArray

    from ..trees import RootedTree
    from .reports import VerificationReport
    from ..counting import CountVector

    Counter = Callable[[RootedTree], CountVector]


def _resolve(
    counter: Counter | None,
    jobs: int | None,
    chunk_size: int | None,
    fail_fast: bool | None,
    progress: bool | None,
    configuration: VerificationConfiguration | None,
) -> tuple[Counter, VerificationConfiguration]:
    """Resolves the counter and merges the keyword overrides into the harness configuration."""
    base = configuration if configuration is not None else VerificationConfiguration()
    resolved = VerificationConfiguration(
        jobs=base.jobs if jobs is None else jobs,
        chunk_size=base.chunk_size if chunk_size is None else chunk_size,
        fail_fast=base.fail_fast if fail_fast is None else fail_fast,
        progress=base.progress if progress is None else progress,
        oracle_limit=base.oracle_limit,
    )
    return (count_transversals if counter is None else counter), resolved


def _require(condition: bool, target: VerificationTarget, requirement: str) -> None:
    """Raises ValueError with a uniform message if a verification precondition does not hold."""
    if not condition:
        message = f"Unable to run the '{target}' verification. {requirement}"
        console.error(message=message, error=ValueError)


def _trees_in_range(first: int, last: int) -> Iterator[RootedTree]:
    """Chains the unconstrained enumeration streams for every size from first to last, smallest size first."""
    return chain.from_iterable(rooted_trees(TreeClassConstraint(n=n)) for n in range(first, last + 1))


def _mask(nodes: Iterable[int]) -> int:
    """Encodes a node set as a subset bitmask."""
    value = 0
    for node in nodes:
        value |= 1 << (node - 1)
    return value


def _boundary_check(tree: RootedTree, counter: Counter) -> tuple[list[Violation], int]:
    """Checks c(T, n) = 1 and c(T, n - 1) = n."""
    vector = counter(tree)
    n = tree.n
    failed = tuple(k for k, expected in ((n - 1, n), (n, 1)) if vector[k] != expected)
    if not failed:
        return [], 0
    detail = f"expected c[{n - 1}]={n} and c[{n}]=1, found {vector}"
    return [Violation(tree=tree.to_text(), k=failed, detail=detail)], 0


def _attainment_violations(tree: RootedTree, vector: CountVector) -> list[Violation]:
    """Checks that the bounds are attained all at once exactly by the path (upper) and the star (lower)."""
    check = sandwich_check(tree, vector)
    n = tree.n
    violations: list[Violation] = []
    is_path = tree.leaf_count == 1
    is_star = tree.leaf_count == n - 1 and len(tree.children(tree.root)) == n - 1
    if check.all_upper_attained != is_path:
        detail = (
            f"all upper bounds attained={check.all_upper_attained}, but the tree has {tree.leaf_count} leaves; "
            f"found {vector}"
        )
        violations.append(Violation(tree=tree.to_text(), detail=detail))
    if check.all_lower_attained != is_star:
        detail = (
            f"all lower bounds attained={check.all_lower_attained}, but the root has "
            f"{len(tree.children(tree.root))} of {n - 1} possible children; found {vector}"
        )
        violations.append(Violation(tree=tree.to_text(), detail=detail))
    return violations


def _sandwich_check(tree: RootedTree, counter: Counter) -> tuple[list[Violation], int]:
    """Checks both sandwich bounds for k = 1..n - 2 and both attainment characterizations."""
    vector = counter(tree)
    check = sandwich_check(tree, vector)
    violations: list[Violation] = []
    if check.lower_violations:
        detail = f"c(T, k) below binom(n - 1, k - 1); found {vector}"
        violations.append(Violation(tree=tree.to_text(), k=check.lower_violations, detail=detail))
    if check.upper_violations:
        detail = f"c(T, k) above binom(n, k); found {vector}"
        violations.append(Violation(tree=tree.to_text(), k=check.upper_violations, detail=detail))
    violations.extend(_attainment_violations(tree, vector))
    return violations, 0


def _attainment_check(tree: RootedTree, counter: Counter) -> tuple[list[Violation], int]:
    """Checks only the two attainment characterizations."""
    return _attainment_violations(tree, counter(tree)), 0


def _extremal_check(
    tree: RootedTree, counter: Counter, extremal: RootedTree, extremal_vector: CountVector
) -> tuple[list[Violation], int]:
    """Checks that the tree is isomorphic to the extremal tree or strictly dominates it."""
    vector = counter(tree)
    verdict = dominance(vector, extremal_vector)
    if tree.canonical_code() == extremal.canonical_code():
        if verdict.relation is DominanceRelation.EQUAL:
            return [], 0
        detail = f"isomorphic to the extremal tree, but found {vector} instead of {extremal_vector}"
    elif verdict.relation is DominanceRelation.STRICTLY_SUCCEEDS:
        return [], 0
    else:
        detail = f"expected {vector} to strictly dominate {extremal_vector}, found '{verdict.relation}'"
    return [Violation(tree=tree.to_text(), other_tree=extremal.to_text(), k=verdict.strict_indices, detail=detail)], 0


def _strict_descent(
    tree: RootedTree, vector: CountVector, altered: RootedTree, counter: Counter, label: str
) -> Violation | None:
    """Returns a violation if the altered tree's vector is not strictly dominated by the tree's vector."""
    altered_vector = counter(altered)
    verdict = dominance(vector, altered_vector)
    if verdict.relation is DominanceRelation.STRICTLY_SUCCEEDS:
        return None
    detail = f"{label}: expected {vector} to strictly dominate {altered_vector}, found '{verdict.relation}'"
    return Violation(tree=tree.to_text(), other_tree=altered.to_text(), k=verdict.strict_indices, detail=detail)


def _shed_images(transversals: NDArray[np.int64], tree_prime: RootedTree, x: int, y: int) -> NDArray[np.int64]:
    """Applies the shed injection to every transversal of the shed tree, encoded as bitmasks."""
    path = _mask(tree_prime.root_path(y))
    swapped = (transversals & ~np.int64(1 << (x - 1))) | np.int64(1 << (y - 1))
    return np.where((transversals & path) != 0, transversals, swapped)


def _lemma_check(
    tree: RootedTree,
    counter: Counter,
    oracle_limit: int,
    check_lift: bool,
    check_shed: bool,
    check_injectivity: bool,
) -> tuple[list[Violation], int]:
    """Checks the lift and shed statements for every valid pair of the tree.

    Notes:
        Transversal tests run over bitmask-encoded subsets. For each lift pair, the check covers strict dominance,
        containment of the altered tree's transversals, and the lift witness. For each shed pair, it covers strict
        dominance and the absence of a preimage for the shed witness (shed) and the injection's size preservation,
        landing set, and injectivity (injectivity).
    """
    lift_pairs = valid_lift_pairs(tree) if check_lift else []
    shed_pairs = valid_shed_pairs(tree) if check_shed or check_injectivity else []
    if not lift_pairs and not shed_pairs:
        return [], 0

    text = tree.to_text()
    vector = counter(tree)
    table = transversal_table(tree, limit=oracle_limit)
    subsets = np.arange(table.size, dtype=np.int64)
    sizes = subset_sizes(tree.n)
    violations: list[Violation] = []

    for x, y in lift_pairs:
        altered = lift(tree, x, y)
        label = f"lift({x}, {y})"
        if check_lift and (violation := _strict_descent(tree, vector, altered, counter, label)) is not None:
            violations.append(violation)
        altered_table = transversal_table(altered, limit=oracle_limit)
        escaped = np.flatnonzero(altered_table & ~table)
        if escaped.size:
            detail = f"{label}: {escaped.size} transversals of the lifted tree are not transversals of the tree"
            violations.append(Violation(tree=text, other_tree=altered.to_text(), detail=detail))
        witness = _mask(lift_witness(tree, x))
        if not table[witness] or altered_table[witness]:
            detail = f"{label}: the lift witness {sorted(lift_witness(tree, x))} does not separate the two trees"
            violations.append(Violation(tree=text, other_tree=altered.to_text(), detail=detail))

    for x, y in shed_pairs:
        altered = shed(tree, x, y)
        label = f"shed({x}, {y})"
        altered_transversals = subsets[transversal_table(altered, limit=oracle_limit)]
        images = _shed_images(altered_transversals, altered, x, y)

        if check_shed:
            if (violation := _strict_descent(tree, vector, altered, counter, label)) is not None:
                violations.append(violation)
            witness_nodes = shed_witness(tree, y)
            witness = _mask(witness_nodes)
            if not table[witness] or np.any(images == witness):
                detail = f"{label}: the shed witness {sorted(witness_nodes)} is not a transversal without a preimage"
                violations.append(Violation(tree=text, other_tree=altered.to_text(), detail=detail))

        if check_injectivity:
            resized = np.flatnonzero(sizes[images] != sizes[altered_transversals])
            if resized.size:
                detail = f"{label}: the injection changes the size of {resized.size} transversals"
                violations.append(Violation(tree=text, other_tree=altered.to_text(), detail=detail))
            if not np.all(table[images]):
                detail = f"{label}: the injection maps a transversal of the shed tree outside the tree's transversals"
                violations.append(Violation(tree=text, other_tree=altered.to_text(), detail=detail))
            if np.unique(images).size != images.size:
                detail = f"{label}: the injection maps two transversals of the shed tree to the same set"
                violations.append(Violation(tree=text, other_tree=altered.to_text(), detail=detail))

    return violations, len(lift_pairs) + len(shed_pairs)


def _descent_check(
    tree: RootedTree, counter: Counter, constraint: TreeClassConstraint, extremal: RootedTree
) -> tuple[list[Violation], int]:
    """Checks that a non-extremal tree has a class-preserving improving step and that every such step improves."""
    if tree.canonical_code() == extremal.canonical_code():
        return [], 0
    steps = class_preserving_steps(tree, constraint)
    if not steps:
        detail = "the tree is not the extremal tree, but no lift or shed step keeps it inside the class"
        return [Violation(tree=tree.to_text(), other_tree=extremal.to_text(), detail=detail)], 0
    vector = counter(tree)
    violations: list[Violation] = []
    for step in steps:
        label = f"{step.kind}({step.x}, {step.y})"
        if (violation := _strict_descent(tree, vector, step.after, counter, label)) is not None:
            violations.append(violation)
    return violations, len(steps)


def verify_boundary(
    n_max: int,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Checks c(T, n) = 1 and c(T, n - 1) = n for every rooted tree with 2 to n_max nodes.

    Args:
        n_max: The largest number of nodes to check.
        counter: The transversal counter under test. Defaults to count_transversals().
        jobs: Overrides the configured number of worker processes.
        chunk_size: Overrides the configured chunk size.
        fail_fast: Overrides the configured fail-fast flag.
        progress: Overrides the configured progress bar flag.
        configuration: The base harness configuration. Defaults to VerificationConfiguration().

    Returns:
        The VerificationReport of the run.

    Raises:
        ValueError: If n_max is less than 2.
    """
    target = VerificationTarget.BOUNDARY
    _require(n_max >= 2, target, f"The largest tree size must be at least 2, but got {n_max}.")  # noqa: PLR2004
    resolved_counter, resolved = _resolve(counter, jobs, chunk_size, fail_fast, progress, configuration)
    return run_verification(
        target=target,
        trees=_trees_in_range(2, n_max),
        check=partial(_boundary_check, counter=resolved_counter),
        configuration=resolved,
        n=n_max,
    )


def verify_sandwich(
    n_max: int,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Checks the binomial sandwich bounds and both attainment characterizations for every tree with 3 to n_max nodes.

    Notes:
        The upper bounds must be attained at every k = 1..n - 2 exactly by the trees with one leaf, and the lower bounds
        exactly by the trees whose root has n - 1 children. Accepts the same keyword arguments as verify_boundary().

    Raises:
        ValueError: If n_max is less than 3.
    """
    target = VerificationTarget.SANDWICH
    _require(n_max >= 3, target, f"The largest tree size must be at least 3, but got {n_max}.")  # noqa: PLR2004
    resolved_counter, resolved = _resolve(counter, jobs, chunk_size, fail_fast, progress, configuration)
    return run_verification(
        target=target,
        trees=_trees_in_range(3, n_max),
        check=partial(_sandwich_check, counter=resolved_counter),
        configuration=resolved,
        n=n_max,
    )


def verify_attainment(
    n_max: int,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Checks only the two attainment characterizations of the sandwich bounds for every tree with 3 to n_max nodes.

    Raises:
        ValueError: If n_max is less than 3.
    """
    target = VerificationTarget.ATTAINMENT
    _require(n_max >= 3, target, f"The largest tree size must be at least 3, but got {n_max}.")  # noqa: PLR2004
    resolved_counter, resolved = _resolve(counter, jobs, chunk_size, fail_fast, progress, configuration)
    return run_verification(
        target=target,
        trees=_trees_in_range(3, n_max),
        check=partial(_attainment_check, counter=resolved_counter),
        configuration=resolved,
        n=n_max,
    )


def _verify_extremal(
    target: VerificationTarget,
    constraint: TreeClassConstraint,
    extremal: RootedTree,
    counter: Counter | None,
    resolved_options: tuple[int | None, int | None, bool | None, bool | None, VerificationConfiguration | None],
) -> VerificationReport:
    """Runs the extremal theorem check over the constraint's class."""
    resolved_counter, resolved = _resolve(counter, *resolved_options)
    report = run_verification(
        target=target,
        trees=rooted_trees(constraint),
        check=partial(
            _extremal_check, counter=resolved_counter, extremal=extremal, extremal_vector=resolved_counter(extremal)
        ),
        configuration=resolved,
        n=constraint.n,
        d=constraint.max_children,
        m=constraint.max_leaves,
    )
    if not constraint.admits(extremal):
        detail = "the extremal tree does not belong to the checked class"
        report.violations.append(Violation(tree=extremal.to_text(), detail=detail))
    return report


def verify_theorem_main(
    n: int,
    d: int,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Checks that every tree on n nodes with at most d children per node strictly dominates the full caterpillar of
    degree d, or is isomorphic to it.

    Args:
        n: The number of nodes.
        d: The largest number of children per node.
        counter: The transversal counter under test. Defaults to count_transversals().
        jobs: Overrides the configured number of worker processes.
        chunk_size: Overrides the configured chunk size.
        fail_fast: Overrides the configured fail-fast flag.
        progress: Overrides the configured progress bar flag.
        configuration: The base harness configuration. Defaults to VerificationConfiguration().

    Returns:
        The VerificationReport of the run.

    Raises:
        ValueError: If d is not between 1 and n - 1.
    """
    constraint = TreeClassConstraint(n=n, max_children=d)
    return _verify_extremal(
        target=VerificationTarget.THEOREM_MAIN,
        constraint=constraint,
        extremal=make_full_caterpillar(n, d),
        counter=counter,
        resolved_options=(jobs, chunk_size, fail_fast, progress, configuration),
    )


def verify_theorem_leaves(
    n: int,
    m: int,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Checks that every tree on n nodes with at most m leaves strictly dominates the caterpillar whose root has m
    children and whose other nodes have at most one child, or is isomorphic to it.

    Raises:
        ValueError: If m is not between 1 and n - 1.
    """
    constraint = TreeClassConstraint(n=n, max_leaves=m)
    return _verify_extremal(
        target=VerificationTarget.THEOREM_LEAVES,
        constraint=constraint,
        extremal=make_leaf_caterpillar(n, m),
        counter=counter,
        resolved_options=(jobs, chunk_size, fail_fast, progress, configuration),
    )


def _verify_lemma_target(
    target: VerificationTarget,
    n_max: int,
    flags: tuple[bool, bool, bool],
    counter: Counter | None,
    resolved_options: tuple[int | None, int | None, bool | None, bool | None, VerificationConfiguration | None],
) -> VerificationReport:
    """Runs the lemma checks selected by the (lift, shed, injectivity) flags over every tree with 1 to n_max nodes."""
    resolved_counter, resolved = _resolve(counter, *resolved_options)
    _require(n_max >= 1, target, f"The largest tree size must be at least 1, but got {n_max}.")
    _require(
        n_max <= resolved.oracle_limit,
        target,
        f"Lemma checks enumerate all node subsets and are limited to {resolved.oracle_limit} nodes, but got {n_max}.",
    )
    check_lift, check_shed, check_injectivity = flags
    return run_verification(
        target=target,
        trees=_trees_in_range(1, n_max),
        check=partial(
            _lemma_check,
            counter=resolved_counter,
            oracle_limit=resolved.oracle_limit,
            check_lift=check_lift,
            check_shed=check_shed,
            check_injectivity=check_injectivity,
        ),
        configuration=resolved,
        n=n_max,
    )


def verify_lemma_lift(
    n_max: int,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Checks strict dominance, transversal containment, and the lift witness for every valid lift pair of every tree
    with at most n_max nodes.

    Raises:
        ValueError: If n_max is less than 1 or exceeds the configured oracle limit.
    """
    return _verify_lemma_target(
        target=VerificationTarget.LEMMA_LIFT,
        n_max=n_max,
        flags=(True, False, False),
        counter=counter,
        resolved_options=(jobs, chunk_size, fail_fast, progress, configuration),
    )


def verify_lemma_shed(
    n_max: int,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Checks strict dominance and the shed witness for every valid shed pair of every tree with at most n_max nodes.

    Raises:
        ValueError: If n_max is less than 1 or exceeds the configured oracle limit.
    """
    return _verify_lemma_target(
        target=VerificationTarget.LEMMA_SHED,
        n_max=n_max,
        flags=(False, True, False),
        counter=counter,
        resolved_options=(jobs, chunk_size, fail_fast, progress, configuration),
    )


def verify_shed_injectivity(
    n_max: int,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Checks that the shed injection preserves sizes, lands in transversals of the original tree, and is injective,
    for every valid shed pair of every tree with at most n_max nodes.

    Raises:
        ValueError: If n_max is less than 1 or exceeds the configured oracle limit.
    """
    return _verify_lemma_target(
        target=VerificationTarget.SHED_INJECTIVITY,
        n_max=n_max,
        flags=(False, False, True),
        counter=counter,
        resolved_options=(jobs, chunk_size, fail_fast, progress, configuration),
    )


def verify_lemmas(
    n_max: int,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Runs the lift, shed, and injectivity checks in a single pass over every tree with at most n_max nodes.

    Raises:
        ValueError: If n_max is less than 1 or exceeds the configured oracle limit.
    """
    return _verify_lemma_target(
        target=VerificationTarget.LEMMAS,
        n_max=n_max,
        flags=(True, True, True),
        counter=counter,
        resolved_options=(jobs, chunk_size, fail_fast, progress, configuration),
    )


def verify_descent(
    n: int,
    d: int | None = None,
    m: int | None = None,
    counter: Counter | None = None,
    jobs: int | None = None,
    chunk_size: int | None = None,
    fail_fast: bool | None = None,
    progress: bool | None = None,
    configuration: VerificationConfiguration | None = None,
) -> VerificationReport:
    """Checks that every tree of the class other than the extremal caterpillar has a lift or shed step that stays in
    the class, and that every such step strictly decreases the count vector.

    Notes:
        Exactly one of d (children bound) and m (leaf bound) must be given. The extremal tree is the full caterpillar
        of degree d, or the caterpillar whose root has m children.

    Raises:
        ValueError: If neither or both bounds are given, or the given bound is not between 1 and n - 1.
    """
    target = VerificationTarget.DESCENT
    _require((d is None) != (m is None), target, f"Exactly one of d and m must be given, but got d={d} and m={m}.")
    constraint = TreeClassConstraint(n=n, max_children=d, max_leaves=m)
    extremal = make_full_caterpillar(n, d) if d is not None else make_leaf_caterpillar(n, m)  # type: ignore[arg-type]
    resolved_counter, resolved = _resolve(counter, jobs, chunk_size, fail_fast, progress, configuration)
    return run_verification(
        target=target,
        trees=rooted_trees(constraint),
        check=partial(_descent_check, counter=resolved_counter, constraint=constraint, extremal=extremal),
        configuration=resolved,
        n=n,
        d=d,
        m=m,
    )
