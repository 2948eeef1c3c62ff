"""Fold-averaged normalization of elimination ranks into [0, 1] scores."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class FeatureRanking:
    per_fold_ranks: list[list[int]]  # one permutation of 1..d per fold
    scores: np.ndarray  # per-feature, in [0, 1], 1 = most important
    d: int
    k: int


def ranking_score(per_fold_ranks: list[list[int]], d: int, k: int) -> np.ndarray:
    """score_j = (1/k) * sum_folds ((d + 1 - r_j) - 1) / (d - 1).

    Rank 1 in every fold scores 1, rank d in every fold scores 0. A single
    feature (d = 1) makes the normalizer vanish; it is trivially the most
    important, so its score is defined as 1.
    """
    if k < 1 or len(per_fold_ranks) != k:
        raise ValueError(f"expected {k} rank lists, got {len(per_fold_ranks)}")
    expected = set(range(1, d + 1))
    for fold, ranks in enumerate(per_fold_ranks):
        if set(ranks) != expected or len(ranks) != d:
            raise ValueError(f"fold {fold} ranks are not a permutation of 1..{d}")
    if d == 1:
        return np.ones(1)
    ranks = np.asarray(per_fold_ranks, dtype=float)
    normalized = ((d + 1 - ranks) - 1.0) / (d - 1.0)
    return normalized.sum(axis=0) / k


def make_ranking(per_fold_ranks: list[list[int]]) -> FeatureRanking:
    k = len(per_fold_ranks)
    if k == 0:
        raise ValueError("need at least one fold of ranks")
    d = len(per_fold_ranks[0])
    return FeatureRanking(
        per_fold_ranks=[list(map(int, r)) for r in per_fold_ranks],
        scores=ranking_score(per_fold_ranks, d, k),
        d=d,
        k=k,
    )
