"""Provides the 'transversals' Command Line Interface (CLI) for counting tree transversals, comparing and altering
trees, building the extremal caterpillars, enumerating tree classes, and running the exhaustive verification harness.
"""

from typing import Any
from pathlib import Path

import click
from ataraxis_base_utilities import LogLevel, console

from ..trees import (
    RootedTree,
    TreeClassConstraint,
    to_dot,
    rooted_trees,
    make_leaf_caterpillar,
    make_full_caterpillar,
)
from ..counting import dominance, count_transversals
from ..transforms import TransformKind, TransformError, apply_step
from ..verification import (
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

# Ensures that displayed CLICK help messages are formatted according to the lab standard.
CONTEXT_SETTINGS = {"max_content_width": 120}  # pragma: no cover

_RANGE_TARGETS = {
    VerificationTarget.BOUNDARY: verify_boundary,
    VerificationTarget.SANDWICH: verify_sandwich,
    VerificationTarget.ATTAINMENT: verify_attainment,
    VerificationTarget.LEMMA_LIFT: verify_lemma_lift,
    VerificationTarget.LEMMA_SHED: verify_lemma_shed,
    VerificationTarget.SHED_INJECTIVITY: verify_shed_injectivity,
    VerificationTarget.LEMMAS: verify_lemmas,
}
"""Maps the targets that sweep every tree size up to a bound to their verification functions."""

_LEMMA_TARGETS = frozenset(
    {
        VerificationTarget.LEMMA_LIFT,
        VerificationTarget.LEMMA_SHED,
        VerificationTarget.SHED_INJECTIVITY,
        VerificationTarget.LEMMAS,
    }
)
"""The range targets that enumerate node subsets and default to the smaller lemma limit."""


class ParentArrayParamType(click.ParamType):
    """Converts the whitespace-separated parent array text into a validated RootedTree."""

    name = "parents"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> RootedTree:
        """Parses the option value, reporting malformed or invalid parent arrays as usage errors."""
        if isinstance(value, RootedTree):
            return value
        try:
            return RootedTree.from_text(str(value))
        except ValueError as error:
            self.fail(message=f"'{value}' is not a valid parent array: {error}", param=param, ctx=ctx)


PARENT_ARRAY = ParentArrayParamType()


def _echo_dot(tree: RootedTree, emit: str | None, name: str = "T") -> None:
    """Prints the DOT rendering of the tree if the command was asked to emit one."""
    if emit == "dot":
        click.echo(to_dot(tree, name=name), nl=False)


@click.group("transversals", context_settings=CONTEXT_SETTINGS)
def transversals() -> None:  # pragma: no cover
    """Counts and compares the transversals of rooted trees and verifies the extremal caterpillar theorems."""


@transversals.command("count")
@click.option(
    "-t", "--tree", type=PARENT_ARRAY, required=True, help="The tree to count, as a parent array (e.g. '0 1 1 2 2')."
)
@click.option("--emit", type=click.Choice(["dot"]), default=None, help="Additionally prints the tree in DOT format.")
def count(tree: RootedTree, emit: str | None) -> None:
    """Prints the number of transversals of every size k = 0..n of the tree."""
    click.echo(str(count_transversals(tree)))
    _echo_dot(tree=tree, emit=emit)


@transversals.command("compare")
@click.option("-a", "--tree-a", type=PARENT_ARRAY, required=True, help="The first tree, as a parent array.")
@click.option("-b", "--tree-b", type=PARENT_ARRAY, required=True, help="The second tree, as a parent array.")
def compare(tree_a: RootedTree, tree_b: RootedTree) -> None:
    """Prints the dominance relation of the first tree's count vector to the second's and the differing indices."""
    if tree_a.n != tree_b.n:
        message = f"Both trees must have the same number of nodes, but got {tree_a.n} and {tree_b.n}."
        raise click.UsageError(message)
    verdict = dominance(count_transversals(tree_a), count_transversals(tree_b))
    indices = ",".join(str(k) for k in verdict.strict_indices)
    click.echo(f"{verdict.relation} k=[{indices}]")


@transversals.command("transform")
@click.option("-t", "--tree", type=PARENT_ARRAY, required=True, help="The tree to alter, as a parent array.")
@click.option(
    "--op", type=click.Choice([str(kind) for kind in TransformKind]), required=True, help="The alteration to apply."
)
@click.option("-x", "--x", "x", type=int, required=True, help="The moved node (lift) or the shed node (shed).")
@click.option("-y", "--y", "y", type=int, required=True, help="The new ancestor (lift) or the receiving leaf (shed).")
@click.option("--emit", type=click.Choice(["dot"]), default=None, help="Additionally prints the result in DOT format.")
def transform(tree: RootedTree, op: str, x: int, y: int, emit: str | None) -> None:
    """Applies a lift or shed alteration and prints the parent array of the resulting tree."""
    try:
        step = apply_step(tree=tree, kind=op, x=x, y=y)
    except (TransformError, IndexError) as error:
        raise click.BadParameter(str(error), param_hint="'--x' / '--y'") from error
    click.echo(step.after.to_text())
    _echo_dot(tree=step.after, emit=emit)


@transversals.command("extremal")
@click.option("-n", "--n", "n", type=int, required=True, help="The number of nodes.")
@click.option("-d", "--max-children", type=int, default=None, help="The largest number of children per node.")
@click.option("-m", "--max-leaves", type=int, default=None, help="The largest number of leaves.")
@click.option("--emit", type=click.Choice(["dot"]), default=None, help="Additionally prints the tree in DOT format.")
def extremal(n: int, max_children: int | None, max_leaves: int | None, emit: str | None) -> None:
    """Prints the extremal caterpillar of the class and its count vector.

    Exactly one of the children and leaf bounds must be provided.
    """
    if (max_children is None) == (max_leaves is None):
        message = "Exactly one of '--max-children' and '--max-leaves' must be provided."
        raise click.UsageError(message)
    try:
        if max_children is not None:
            tree = make_full_caterpillar(n, max_children)
        else:
            tree = make_leaf_caterpillar(n, max_leaves)  # type: ignore[arg-type]
    except ValueError as error:
        raise click.UsageError(str(error)) from error
    click.echo(tree.to_text())
    click.echo(str(count_transversals(tree)))
    _echo_dot(tree=tree, emit=emit)


@transversals.command("enumerate")
@click.option("-n", "--n", "n", type=int, required=True, help="The number of nodes.")
@click.option("-d", "--max-children", type=int, default=None, help="The largest number of children per node.")
@click.option("-m", "--max-leaves", type=int, default=None, help="The largest number of leaves.")
@click.option(
    "--emit",
    type=click.Choice(["parents", "code"]),
    default="parents",
    show_default=True,
    help="The output format of each tree: the parent array or the canonical parenthesis code.",
)
def enumerate_trees(n: int, max_children: int | None, max_leaves: int | None, emit: str) -> None:
    """Prints one representative of every rooted tree isomorphism class in the requested class, one per line."""
    try:
        constraint = TreeClassConstraint(n=n, max_children=max_children, max_leaves=max_leaves)
    except ValueError as error:
        raise click.UsageError(str(error)) from error
    for tree in rooted_trees(constraint):
        click.echo(tree.to_text() if emit == "parents" else tree.canonical_code())


def _echo_verdict(message: str, level: LogLevel, to_stderr: bool) -> None:
    """Reports the verification verdict, keeping it off stdout when stdout carries the JSON report."""
    if to_stderr:
        click.echo(message, err=True)
    else:
        console.echo(message=message, level=level)


def _run_target(
    target: VerificationTarget,
    n: int | None,
    d: int | None,
    m: int | None,
    n_max: int | None,
    configuration: VerificationConfiguration,
) -> VerificationReport:
    """Dispatches the verification target to its harness function.

    Range targets use n_max, then n, then the default exhaustive limit of their target family.
    """
    if target in _RANGE_TARGETS:
        if n_max is None:
            n_max = n
        if n_max is None:
            n_max = DEFAULT_LEMMA_LIMIT if target in _LEMMA_TARGETS else DEFAULT_THEOREM_LIMIT
        return _RANGE_TARGETS[target](n_max=n_max, configuration=configuration)
    if n is None:
        message = f"The '{target}' target requires '--n'."
        raise click.UsageError(message)
    if target is VerificationTarget.THEOREM_MAIN:
        if d is None:
            message = "The 'theorem_main' target requires '--d'."
            raise click.UsageError(message)
        return verify_theorem_main(n=n, d=d, configuration=configuration)
    if target is VerificationTarget.THEOREM_LEAVES:
        if m is None:
            message = "The 'theorem_leaves' target requires '--m'."
            raise click.UsageError(message)
        return verify_theorem_leaves(n=n, m=m, configuration=configuration)
    return verify_descent(n=n, d=d, m=m, configuration=configuration)


@transversals.command("verify")
@click.option(
    "--target",
    type=click.Choice([str(target) for target in VerificationTarget]),
    required=True,
    help="The statement to verify exhaustively.",
)
@click.option(
    "-n",
    "--n",
    "n",
    type=int,
    default=None,
    help=(
        "The number of nodes, or the largest one for range targets. Range targets default to "
        f"{DEFAULT_THEOREM_LIMIT} nodes, or {DEFAULT_LEMMA_LIMIT} for the lemma targets."
    ),
)
@click.option("-d", "--d", "d", type=int, default=None, help="The children bound for 'theorem_main' and 'descent'.")
@click.option("-m", "--m", "m", type=int, default=None, help="The leaf bound for 'theorem_leaves' and 'descent'.")
@click.option("--n-max", type=int, default=None, help="The largest number of nodes for range targets.")
@click.option("-j", "--jobs", type=int, default=None, help="The number of worker processes.")
@click.option("--fail-fast", is_flag=True, default=False, help="Stops at the first violating tree.")
@click.option("--progress", is_flag=True, default=False, help="Displays a progress bar.")
@click.option(
    "-r",
    "--report",
    type=click.Path(file_okay=True, dir_okay=False, path_type=Path),
    default=None,
    help="The path to the .json file where to save the report. If omitted, the report is printed to the terminal.",
)
@click.option(
    "-c",
    "--config",
    "config_path",
    type=click.Path(exists=True, file_okay=True, dir_okay=False, path_type=Path),
    default=None,
    help="The path to a .yaml harness configuration file to load.",
)
@click.option(
    "--save-config",
    type=click.Path(file_okay=True, dir_okay=False, path_type=Path),
    default=None,
    help="The path to the .yaml file where to save the effective harness configuration.",
)
@click.pass_context
def verify(
    ctx: click.Context,
    target: str,
    n: int | None,
    d: int | None,
    m: int | None,
    n_max: int | None,
    jobs: int | None,
    fail_fast: bool,
    progress: bool,
    report: Path | None,
    config_path: Path | None,
    save_config: Path | None,
) -> None:
    """Exhaustively verifies the requested statement and exits with code 1 if any violation is found."""
    configuration = (
        VerificationConfiguration.from_yaml(file_path=config_path)
        if config_path is not None
        else VerificationConfiguration()
    )
    if jobs is not None:
        configuration.jobs = jobs
    configuration.fail_fast = configuration.fail_fast or fail_fast
    configuration.progress = configuration.progress or progress
    if save_config is not None:
        configuration.to_yaml(file_path=save_config)

    try:
        outcome = _run_target(
            target=VerificationTarget(target), n=n, d=d, m=m, n_max=n_max, configuration=configuration
        )
    except ValueError as error:
        raise click.UsageError(str(error)) from error

    if report is None:
        click.echo(outcome.to_json())
    else:
        report.write_text(outcome.to_json() + "\n", encoding="utf-8")
        click.echo(outcome.summary_table())

    if outcome.passed:
        _echo_verdict(message=f"Verification of '{target}' passed.", level=LogLevel.SUCCESS, to_stderr=report is None)
        return
    _echo_verdict(
        message=f"Verification of '{target}' failed with {len(outcome.violations)} violation(s).",
        level=LogLevel.WARNING,
        to_stderr=report is None,
    )
    ctx.exit(1)
