"""Exhaustive ground truth: best bipartition and best set partition.

Searching all bipartitions of n rows means 2^(n-1) - 1 candidates; all set
partitions, Bell(n). Both explode quickly, so hard size guards raise rather
than let a call run for hours. Partitions are enumerated via restricted
growth strings, which visit each set partition exactly once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .cluster import ClusterOptions, SplitEvaluation, evaluate_bipartition, \
    greedy_bisect
from .entropy import Grouping, decompose
from .errors import SizeLimitError
from .matrix import LabeledMatrix, ProbabilityModel, RowSubset, check_subset, \
    probability_model

MAX_BISECT_ROWS = 24
MAX_PARTITION_ROWS = 12
TOL = 1e-12


@dataclass(frozen=True)
class OracleReport:
    """Result of an exhaustive search, optionally compared to the greedy run."""

    best_grouping: Grouping
    best_h0: float
    candidates_examined: int
    greedy_h0: float | None = None
    gap: float | None = None  # best_h0 - greedy_h0, >= 0 up to rounding


def restricted_growth_strings(n: int, max_groups: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of n items with at most max_groups blocks.

    Yields restricted growth strings a with a[0] = 0 and
    a[i] <= max(a[:i]) + 1, in lexicographic order.
    """
    if n == 0:
        return
    a = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(a)
            return
        for v in range(min(top + 1, max_groups - 1) + 1):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def _lex_subsets(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of `items` in lexicographic order of sorted tuples."""

    def rec(prefix: tuple[int, ...], start: int):
        for k in range(start, len(items)):
            cur = prefix + (items[k],)
            yield cur
            yield from rec(cur, k + 1)

    yield from rec((), 0)


def exhaustive_bisect(model: ProbabilityModel,
                      subtree: RowSubset) -> SplitEvaluation:
    """Bipartition of `subtree` maximizing local transmission, by brute force.

    Candidates are the 2^(n-1) - 1 bipartitions, enumerated as subsets
    containing the first row; ties go to the lexicographically smallest
    such subset.
    """
    subtree = tuple(sorted(check_subset(model, subtree)))
    n = len(subtree)
    if n < 2:
        raise ValueError("cannot bisect fewer than 2 rows")
    if n > MAX_BISECT_ROWS:
        raise SizeLimitError(
            f"{n} rows exceeds the exhaustive bisect limit of "
            f"{MAX_BISECT_ROWS} (2^{n - 1} - 1 candidates)")

    first, rest = subtree[0], subtree[1:]
    best = None
    count = 0
    for sub in itertools.chain([()], _lex_subsets(rest)):
        if len(sub) == len(rest):
            continue  # complement would be empty
        count += 1
        ev = evaluate_bipartition(model, subtree, (first,) + sub)
        if best is None or ev.local_h0 > best.local_h0 + TOL:
            best = ev
    assert count == 2 ** (n - 1) - 1, (count, n)
    return best


def exhaustive_partition(model: ProbabilityModel,
                         max_groups: int) -> OracleReport:
    """Grouping of all rows maximizing H0, over every set partition.

    Ties are resolved toward fewer groups, then toward the lexicographically
    smallest restricted growth string.
    """
    n = model.n_rows
    if n > MAX_PARTITION_ROWS:
        raise SizeLimitError(
            f"{n} rows exceeds the exhaustive partition limit of "
            f"{MAX_PARTITION_ROWS} (Bell-number growth)")
    if not 1 <= max_groups <= n:
        raise ValueError(f"max_groups must be in 1..{n}")

    best_grouping = None
    best_h0 = -1.0
    best_m = n + 1
    count = 0
    for rgs in restricted_growth_strings(n, max_groups):
        count += 1
        m = max(rgs) + 1
        grouping = Grouping(rgs, m)
        h0 = decompose(model, grouping).h0
        if h0 > best_h0 + TOL or (abs(h0 - best_h0) <= TOL and m < best_m):
            best_grouping, best_h0, best_m = grouping, h0, m
    return OracleReport(best_grouping=best_grouping, best_h0=best_h0,
                        candidates_examined=count)


def verify_greedy(matrix: LabeledMatrix,
                  options: ClusterOptions = ClusterOptions(),
                  ) -> OracleReport:
    """Compare greedy and exhaustive bisection at the root of the matrix."""
    model = probability_model(matrix)
    all_rows = tuple(range(model.n_rows))
    exact = exhaustive_bisect(model, all_rows)
    greedy = greedy_bisect(model, all_rows,
                           ClusterOptions(stop_rule="full",
                                          min_delta=options.min_delta))
    greedy_h0 = greedy.local_h0 if greedy is not None else 0.0
    grouping = Grouping.from_sets([exact.left, exact.right], model.n_rows)
    return OracleReport(best_grouping=grouping, best_h0=exact.local_h0,
                        candidates_examined=2 ** (model.n_rows - 1) - 1,
                        greedy_h0=greedy_h0, gap=exact.local_h0 - greedy_h0)
