"""Shannon entropy and its between/within-group decomposition.

For a grouping of the rows, the aggregate entropy splits as

    H = H0 + sum_g Pg * Hg

where H0 is the between-group part: the mutual information (transmission)
between the grouping variable and the column variable. Equivalent identities

    H(n|m) = H(n,m) - H(m)
    H0     = H(n) + H(m) - H(n,m)

are computed and (optionally) asserted on every decomposition. All entropies
are in bits (base-2 logarithms).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import ProbabilityModel

IDENTITY_TOL = 1e-9  # bits


@dataclass(frozen=True)
class Grouping:
    """Assignment of each row to one of m groups, ids 0..m-1, all used."""

    assignment: tuple[int, ...]
    m: int

    def __post_init__(self):
        used = set(self.assignment)
        if used != set(range(self.m)):
            raise ValueError(
                f"group ids must cover 0..{self.m - 1}, got {sorted(used)}")

    @classmethod
    def from_sets(cls, groups, n_rows: int) -> "Grouping":
        """Build a Grouping from an iterable of disjoint row-index sets."""
        groups = [tuple(g) for g in groups]
        assignment = [-1] * n_rows
        for g, members in enumerate(groups):
            for i in members:
                if assignment[i] != -1:
                    raise ValueError(f"row {i} assigned twice")
                assignment[i] = g
        if -1 in assignment:
            raise ValueError("grouping does not cover all rows")
        return cls(tuple(assignment), len(groups))

    def members(self, g: int) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.assignment) if a == g)


@dataclass(frozen=True)
class EntropyReport:
    """All entropies of one (model, grouping) pair, in bits."""

    h_n: float       # entropy of the column marginal
    h_m: float       # entropy of the group weights
    h_joint: float   # entropy of the (group, column) joint
    h_cond: float    # within-group expectation, H(n|m)
    h0: float        # between-group part / transmission
    groups: tuple[tuple[float, float], ...]  # per group: (p_g, h_g)
    h0_ratio: float  # auxiliary: h0 / h_n (0 when h_n == 0)


def shannon_entropy(dist) -> float:
    """Entropy -sum p*log2(p) of a probability vector, with 0*log2(0) = 0."""
    p = np.asarray(dist, dtype=float)
    if np.any(p < 0):
        raise ValueError("probabilities must be nonnegative")
    total = p.sum()
    if abs(total - 1.0) > IDENTITY_TOL:
        raise ValueError(f"probabilities sum to {total}, expected 1")
    nz = p[p > 0]
    return float(max(-(nz * np.log2(nz)).sum(), 0.0))


def decompose(model: ProbabilityModel, grouping: Grouping,
              verify: bool = True) -> EntropyReport:
    """Entropy decomposition of the column variable under a row grouping.

    With verify=True the three decomposition identities are asserted to
    within 1e-9 bits; a violation indicates a bug, not bad data.
    """
    if len(grouping.assignment) != model.n_rows:
        raise ValueError(
            f"grouping covers {len(grouping.assignment)} rows, "
            f"model has {model.n_rows}")

    assign = np.asarray(grouping.assignment)
    # Aggregated joint over (group, column).
    agg = np.zeros((grouping.m, model.n_cols))
    np.add.at(agg, assign, model.joint)

    weights = agg.sum(axis=1)
    h_m = shannon_entropy(weights)
    h_n = shannon_entropy(model.col_marginal)
    h_joint = shannon_entropy(agg.ravel())
    h_cond = h_joint - h_m
    h0 = h_n + h_m - h_joint

    groups = []
    for g in range(grouping.m):
        p_g = float(weights[g])
        h_g = shannon_entropy(agg[g] / p_g)
        groups.append((p_g, h_g))

    if verify:
        within = sum(p_g * h_g for p_g, h_g in groups)
        assert abs(h_n - (h0 + within)) <= IDENTITY_TOL
        assert abs(h_cond - within) <= IDENTITY_TOL
        assert abs(h0 - (h_n + h_m - h_joint)) <= IDENTITY_TOL
        assert -IDENTITY_TOL <= h0 <= min(h_n, h_m) + IDENTITY_TOL

    ratio = h0 / h_n if h_n > 0 else 0.0
    return EntropyReport(h_n=h_n, h_m=h_m, h_joint=h_joint, h_cond=h_cond,
                         h0=h0, groups=tuple(groups), h0_ratio=ratio)


def transmission(model: ProbabilityModel, grouping: Grouping) -> float:
    """Mutual information between the grouping and the column variable."""
    return decompose(model, grouping).h0
