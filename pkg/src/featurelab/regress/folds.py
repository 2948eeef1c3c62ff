"""Deterministic cross-validation fold assignment."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FoldPlan:
    """Assignment of each sample to one of k folds.

    A pure function of (n, k, seed): the seeded permutation is split into
    k chunks whose sizes differ by at most one.
    """

    k: int
    seed: int
    assignments: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.assignments)

    def test_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(np.array(self.assignments) == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(np.array(self.assignments) != fold)


def make_fold_plan(n: int, k: int, seed: int) -> FoldPlan:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n < k:
        raise ValueError(f"cannot split {n} samples into {k} folds")
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    assignments = np.empty(n, dtype=int)
    base, extra = divmod(n, k)
    start = 0
    for fold in range(k):
        size = base + (1 if fold < extra else 0)
        assignments[order[start : start + size]] = fold
        start += size
    return FoldPlan(k=k, seed=seed, assignments=tuple(int(a) for a in assignments))
