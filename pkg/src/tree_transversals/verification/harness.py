"""Provides the chunked driver that runs a per-tree check over an enumeration stream, optionally across a pool of worker
processes, and merges the outcomes into a VerificationReport in stream order.
"""

from __future__ import annotations

from typing import TYPE_CHECKING
from itertools import batched
from dataclasses import field, dataclass
from concurrent.futures import Future, ProcessPoolExecutor, as_completed

from tqdm import tqdm
from ataraxis_time import PrecisionTimer, TimerPrecisions
from ataraxis_base_utilities import LogLevel, console

from .reports import Violation, VerificationReport
from .configuration import VerificationConfiguration

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable

    from ..trees import RootedTree
    from .reports import VerificationTarget

    TreeCheck = Callable[[RootedTree], tuple[list[Violation], int]]
    """A per-tree check. It returns the violations found for the tree and the number of pairs or steps it checked."""


@dataclass
class ChunkOutcome:
    """Stores the merged outcome of checking one chunk of the enumeration stream."""

    trees_checked: int = 0
    """The number of trees of the chunk that were checked."""
    pairs_checked: int = 0
    """The number of pairs or steps checked across those trees."""
    violations: list[Violation] = field(default_factory=list)
    """The violations found, in stream order."""


def check_chunk(check: TreeCheck, trees: tuple[RootedTree, ...], fail_fast: bool) -> ChunkOutcome:
    """Runs the check on every tree of the chunk in order.

    Args:
        check: The per-tree check. It must be picklable when the chunk runs in a worker process.
        trees: The chunk of the enumeration stream.
        fail_fast: Determines whether to stop after the first tree that produces a violation.

    Returns:
        The ChunkOutcome of the chunk.
    """
    outcome = ChunkOutcome()
    for tree in trees:
        violations, pairs = check(tree)
        outcome.trees_checked += 1
        outcome.pairs_checked += pairs
        outcome.violations.extend(violations)
        if fail_fast and violations:
            break
    return outcome


def _run_chunks_in_pool(
    check: TreeCheck,
    chunks: list[tuple[RootedTree, ...]],
    configuration: VerificationConfiguration,
    progress: tqdm | None,
) -> dict[int, ChunkOutcome]:
    """Submits every chunk to a process pool and collects the outcomes keyed by chunk index.

    Notes:
        With fail-fast enabled, a violating chunk cancels every pending chunk that comes after it in the stream.
        Earlier chunks always run to completion, so the merged report does not depend on completion order.
    """
    outcomes: dict[int, ChunkOutcome] = {}
    with ProcessPoolExecutor(max_workers=configuration.jobs) as executor:
        # noinspection PyTypeChecker
        futures: dict[Future[ChunkOutcome], int] = {
            executor.submit(check_chunk, check, chunk, configuration.fail_fast): index
            for index, chunk in enumerate(chunks)
        }
        for future in as_completed(futures):
            if future.cancelled():
                continue
            index = futures[future]
            outcome = future.result()
            outcomes[index] = outcome
            if progress is not None:
                progress.update(1)
            if configuration.fail_fast and outcome.violations:
                for pending, pending_index in futures.items():
                    if pending_index > index:
                        pending.cancel()
    return outcomes


def run_verification(
    target: VerificationTarget,
    trees: Iterable[RootedTree],
    check: TreeCheck,
    configuration: VerificationConfiguration,
    n: int,
    d: int | None = None,
    m: int | None = None,
) -> VerificationReport:
    """Runs the per-tree check over the tree stream and assembles the VerificationReport.

    Args:
        target: The checked statement.
        trees: The enumeration stream. Its order defines the order of violations in the report.
        check: The per-tree check.
        configuration: The harness runtime parameters.
        n: The report's node count parameter.
        d: The report's children bound parameter, if the target uses one.
        m: The report's leaf bound parameter, if the target uses one.

    Returns:
        The VerificationReport of the run.

    Raises:
        ValueError: If the configuration requests fewer than one worker or an empty chunk size.
    """
    if configuration.jobs < 1 or configuration.chunk_size < 1:
        message = (
            f"Unable to run the '{target}' verification. The number of jobs and the chunk size must both be at least "
            f"1, but got jobs={configuration.jobs} and chunk_size={configuration.chunk_size}."
        )
        console.error(message=message, error=ValueError)

    timer = PrecisionTimer(precision=TimerPrecisions.MILLISECOND)
    timer.reset()
    chunks = list(batched(trees, configuration.chunk_size))
    console.echo(
        message=f"Verifying '{target}' over {len(chunks)} chunks with {configuration.jobs} worker(s)...",
        level=LogLevel.DEBUG,
    )

    progress = tqdm(total=len(chunks), desc=f"Verifying {target}", unit="chunk") if configuration.progress else None
    try:
        if configuration.jobs == 1:
            outcomes: dict[int, ChunkOutcome] = {}
            for index, chunk in enumerate(chunks):
                outcomes[index] = check_chunk(check=check, trees=chunk, fail_fast=configuration.fail_fast)
                if progress is not None:
                    progress.update(1)
                if configuration.fail_fast and outcomes[index].violations:
                    break
        else:
            outcomes = _run_chunks_in_pool(
                check=check, chunks=chunks, configuration=configuration, progress=progress
            )
    finally:
        if progress is not None:
            progress.close()

    # Merges in stream order. Fail-fast truncates at the first chunk that holds a violation.
    report = VerificationReport(target=target, n=n, d=d, m=m)
    for index in range(len(chunks)):
        outcome = outcomes[index]
        report.trees_checked += outcome.trees_checked
        report.pairs_checked += outcome.pairs_checked
        report.violations.extend(outcome.violations)
        console.echo(
            message=f"Merged chunk {index}: {outcome.trees_checked} trees, {len(outcome.violations)} violations.",
            level=LogLevel.DEBUG,
        )
        if configuration.fail_fast and outcome.violations:
            break

    report.elapsed_ms = int(timer.elapsed)
    console.echo(
        message=(
            f"Finished verifying '{target}': {report.trees_checked} trees, {report.pairs_checked} pairs, "
            f"{len(report.violations)} violations in {report.elapsed_ms} ms."
        ),
        level=LogLevel.DEBUG,
    )
    return report
