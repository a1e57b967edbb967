"""Threshold-free ranking quality: AUC via the rank-sum statistic.

AUC is the probability that a uniformly random class-0 score is lower
than a uniformly random class-1 score, with ties credited 1/2. Computed
with midranks in O(n log n); the all-pairs brute force lives in the test
suite as the oracle.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .confusion import ScoredRecord, _scores_labels
from .metrics import MetricValue

__all__ = ["auc"]


def auc(records: Sequence[ScoredRecord]) -> MetricValue:
    """Rank-based AUC with ties counted as half. Undefined if either class
    has no members.
    """
    scores, labels = _scores_labels(records)
    n1 = int(np.count_nonzero(labels == 1))
    n0 = scores.size - n1
    if n0 == 0 or n1 == 0:
        return MetricValue.undefined("one class absent")
    _, inverse, counts = np.unique(scores, return_inverse=True, return_counts=True)
    ends = np.cumsum(counts)  # 1-based end position of each tie group
    midranks = ends - (counts - 1) / 2.0
    ranks = midranks[inverse]
    rank_sum1 = float(ranks[labels == 1].sum())
    u1 = rank_sum1 - n1 * (n1 + 1) / 2.0  # wins + ties/2, exactly
    return MetricValue.defined(u1 / (n0 * n1))
