"""Greedy divisive clustering by maximization of between-group information.

One bipartition of a row group is scored by the transmission (mutual
information) between the two-group variable and the column variable,
computed with probabilities renormalized to the group. Its contribution to
the total between-group information of the whole matrix is that local value
re-weighted by the group's share of the grand sum; the chain rule then makes
dendrogram heights exactly additive.

A split is "divisive" when both halves have strictly lower pooled-profile
entropy than the undivided group. Setting apart a subgroup that raises one
side's entropy removes heterogeneity but is not clustering; under the
default stop rule such splits are rejected.

The greedy search per group: try every single row as a seed subgroup, keep
the admissible seeds, start from the one with the highest transmission,
then repeatedly move in the single best outside row while that strictly
increases the transmission.
"""

from __future__ import annotations

from dataclasses import dataclass

from .entropy import shannon_entropy
from .matrix import (
    LabeledMatrix,
    ProbabilityModel,
    RowSubset,
    check_subset,
    pooled_profile,
    probability_model,
)

STRICT_TOL = 1e-12  # strict ">" / "<" comparisons in bits


@dataclass(frozen=True)
class ClusterOptions:
    """Knobs for the divisive clustering run.

    stop_rule: "divisive" stops recursion where no strictly divisive split
    exists; "full" keeps splitting down to singletons, flagging each split.
    min_delta: minimum strict transmission gain for a growth move, in bits.
    Tie-breaking is always by lowest row index and is not configurable.
    """

    stop_rule: str = "divisive"
    min_delta: float = 0.0

    def __post_init__(self):
        if self.stop_rule not in ("divisive", "full"):
            raise ValueError(f"unknown stop_rule: {self.stop_rule!r}")
        if self.min_delta < 0:
            raise ValueError("min_delta must be >= 0")


@dataclass(frozen=True)
class SplitEvaluation:
    """One bipartition of a row group and its information accounting."""

    left: RowSubset
    right: RowSubset
    h_aggregate: float   # entropy of the pooled profile of left+right
    h_left: float
    h_right: float
    local_h0: float      # transmission within the group (renormalized)
    global_delta: float  # group weight x local_h0: contribution to total H0
    divisive: bool       # both halves strictly below h_aggregate


@dataclass(frozen=True)
class DendrogramNode:
    """Node of the binary split tree; height is cumulative bits from root."""

    members: RowSubset
    height: float
    split: SplitEvaluation | None = None
    children: tuple["DendrogramNode", "DendrogramNode"] | None = None

    @property
    def is_leaf(self) -> bool:
        return self.children is None


@dataclass(frozen=True)
class Dendrogram:
    root: DendrogramNode
    row_labels: tuple[str, ...]

    def leaves(self) -> list[DendrogramNode]:
        out: list[DendrogramNode] = []

        def walk(node):
            if node.is_leaf:
                out.append(node)
            else:
                walk(node.children[0])
                walk(node.children[1])

        walk(self.root)
        return out

    def max_height(self) -> float:
        best = 0.0

        def walk(node):
            nonlocal best
            if not node.is_leaf:
                cut = node.height + node.split.global_delta
                best = max(best, cut)
                walk(node.children[0])
                walk(node.children[1])

        walk(self.root)
        return best


def evaluate_bipartition(model: ProbabilityModel, subtree: RowSubset,
                         left: RowSubset) -> SplitEvaluation:
    """Score one bipartition of `subtree` into `left` and its complement."""
    subtree = check_subset(model, subtree)
    left = check_subset(model, left)
    sub_set = set(subtree)
    left_set = set(left)
    if not left_set < sub_set:
        raise ValueError("left must be a proper subset of subtree")
    right = tuple(i for i in subtree if i not in left_set)

    w_sub, prof_sub = pooled_profile(model, subtree)
    w_l, prof_l = pooled_profile(model, left)
    w_r, prof_r = pooled_profile(model, right)

    h_agg = shannon_entropy(prof_sub)
    h_l = shannon_entropy(prof_l)
    h_r = shannon_entropy(prof_r)

    # Within-subtree weights; the chain rule wants global_delta = w_sub * h0.
    local_h0 = h_agg - (w_l * h_l + w_r * h_r) / w_sub
    local_h0 = max(local_h0, 0.0)
    divisive = (h_l < h_agg - STRICT_TOL) and (h_r < h_agg - STRICT_TOL)
    return SplitEvaluation(left=left, right=right, h_aggregate=h_agg,
                           h_left=h_l, h_right=h_r, local_h0=local_h0,
                           global_delta=w_sub * local_h0, divisive=divisive)


def greedy_bisect(model: ProbabilityModel, subtree: RowSubset,
                  options: ClusterOptions = ClusterOptions(),
                  ) -> SplitEvaluation | None:
    """Best bipartition of `subtree` by seed-and-grow hill climbing.

    Returns None (no split) when no admissible seed exists, or when the
    grown bipartition is not divisive under the "divisive" stop rule.
    """
    subtree = check_subset(model, subtree)
    if len(subtree) < 2:
        raise ValueError("cannot bisect fewer than 2 rows")

    # Seed: best admissible single-row set-aside, ties by lowest row index.
    candidates = [evaluate_bipartition(model, subtree, (i,)) for i in subtree]
    if options.stop_rule == "divisive":
        candidates = [c for c in candidates if c.divisive]
    if not candidates:
        return None
    best = candidates[0]
    for c in candidates[1:]:
        if c.local_h0 > best.local_h0 + STRICT_TOL:
            best = c

    # Growth: best-improvement moves of one row into the seed group.
    while len(best.right) > 1:
        move_best = None
        for i in best.right:
            cand = evaluate_bipartition(model, subtree, best.left + (i,))
            if cand.local_h0 > best.local_h0 + max(options.min_delta,
                                                   STRICT_TOL):
                if move_best is None or \
                        cand.local_h0 > move_best.local_h0 + STRICT_TOL:
                    move_best = cand
        if move_best is None:
            break
        best = move_best

    # The divisive flag of the final, grown bipartition governs acceptance.
    if options.stop_rule == "divisive" and not best.divisive:
        return None
    return best


def divisive_cluster(matrix: LabeledMatrix,
                     options: ClusterOptions = ClusterOptions(),
                     method: str = "greedy") -> Dendrogram:
    """Recursive divisive clustering of the matrix rows.

    method: "greedy" uses greedy_bisect; "exhaustive" uses the oracle's
    exhaustive_bisect at every node (small matrices only).
    """
    if method not in ("greedy", "exhaustive"):
        raise ValueError(f"unknown method: {method!r}")
    model = probability_model(matrix)

    def bisect(subtree: RowSubset) -> SplitEvaluation | None:
        if method == "greedy":
            return greedy_bisect(model, subtree, options)
        from .oracle import exhaustive_bisect
        ev = exhaustive_bisect(model, subtree)
        if options.stop_rule == "divisive" and not ev.divisive:
            return None
        return ev

    def build(subtree: RowSubset, height: float) -> DendrogramNode:
        if len(subtree) < 2:
            return DendrogramNode(members=subtree, height=height)
        split = bisect(subtree)
        if split is None:
            return DendrogramNode(members=subtree, height=height)
        child_h = height + split.global_delta
        left = build(split.left, child_h)
        right = build(split.right, child_h)
        return DendrogramNode(members=subtree, height=height, split=split,
                              children=(left, right))

    root = build(tuple(range(matrix.n_rows)), 0.0)
    return Dendrogram(root=root, row_labels=matrix.row_labels)


def extract_clusters(dendrogram: Dendrogram, rule: str = "nondivisive",
                     height: float | None = None) -> list[RowSubset]:
    """Cut the dendrogram into flat clusters.

    rule "nondivisive": descend from the root through divisive splits only;
    the maximal subtrees reached are the clusters (the level at which the
    total between-group information is maximal under the divisive rule).
    rule "height": clusters are the maximal subtrees whose split would lie
    above cumulative height `height`.
    """
    if rule not in ("nondivisive", "height"):
        raise ValueError(f"unknown cut rule: {rule!r}")
    if rule == "height":
        if height is None:
            raise ValueError("height cut requires a height")
        if height < 0:
            raise ValueError("cut height must be >= 0")

    out: list[RowSubset] = []

    def walk(node: DendrogramNode):
        if node.is_leaf:
            out.append(node.members)
            return
        if rule == "nondivisive":
            descend = node.split.divisive
        else:
            descend = node.height + node.split.global_delta <= height
        if descend:
            walk(node.children[0])
            walk(node.children[1])
        else:
            out.append(node.members)

    walk(dendrogram.root)
    return out
