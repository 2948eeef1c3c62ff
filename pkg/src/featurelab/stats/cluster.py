"""Agglomerative clustering of correlation profiles.

Labels whose rows of the correlation matrix look alike (euclidean
distance) merge first; average linkage keeps merge distances monotone.
All tie-breaking is explicit so the dendrogram is a pure function of the
input matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .correlation import CorrelationMatrix


@dataclass
class Dendrogram:
    """Merge trace of agglomerative clustering.

    Cluster ids follow the usual convention: leaves are 0..m-1 and the
    i-th merge creates cluster m+i. ``leaf_order`` is the left-to-right
    traversal with the lower-index child first at every merge.
    """

    merges: list[tuple[int, int, float]]
    leaf_order: list[int]
    cut_distance: Optional[float] = None

    def flat_clusters(self, cut_distance: float) -> list[list[int]]:
        """Leaf groups obtained by cutting all merges above the distance."""
        m = len(self.merges) + 1
        members = {i: [i] for i in range(m)}
        for idx, (a, b, dist) in enumerate(self.merges):
            if dist > cut_distance:
                break
            members[m + idx] = members.pop(a) + members.pop(b)
        return sorted(members.values(), key=lambda grp: grp[0])


def hcluster(matrix: CorrelationMatrix) -> Dendrogram:
    """Average-linkage clustering on correlation-profile distances.

    The pairwise distance between labels a and b is the euclidean distance
    between rows a and b of the matrix. Ties in the minimum linkage
    distance break toward the smallest (a, b) pair.
    """
    m = matrix.size
    if m < 2:
        raise ValueError("need at least 2 labels to cluster")
    rows = np.asarray(matrix.values, dtype=float)
    diff = rows[:, None, :] - rows[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=2))

    # linkage distances between live clusters, keyed by cluster id
    active: dict[int, dict[int, float]] = {
        i: {j: float(dist[i, j]) for j in range(m) if j != i} for i in range(m)
    }
    sizes = {i: 1 for i in range(m)}
    children: dict[int, tuple[int, int]] = {}
    merges: list[tuple[int, int, float]] = []
    next_id = m

    while len(active) > 1:
        best: tuple[float, int, int] | None = None
        for a in sorted(active):
            for b in sorted(active[a]):
                if b <= a:
                    continue
                d = active[a][b]
                if best is None or d < best[0] or (d == best[0] and (a, b) < best[1:]):
                    best = (d, a, b)
        d, a, b = best
        merged_size = sizes[a] + sizes[b]
        new_links = {}
        for other in active:
            if other in (a, b):
                continue
            linked = (sizes[a] * active[a][other] + sizes[b] * active[b][other]) / merged_size
            new_links[other] = linked
        for other in list(active):
            active[other].pop(a, None)
            active[other].pop(b, None)
        del active[a], active[b]
        for other, linked in new_links.items():
            active[other][next_id] = linked
        active[next_id] = new_links
        sizes[next_id] = merged_size
        children[next_id] = (a, b)
        merges.append((a, b, d))
        next_id += 1

    leaf_order: list[int] = []

    def _walk(cluster: int) -> None:
        if cluster < m:
            leaf_order.append(cluster)
            return
        a, b = children[cluster]
        _walk(min(a, b))
        _walk(max(a, b))

    _walk(next_id - 1)
    return Dendrogram(merges=merges, leaf_order=leaf_order)
