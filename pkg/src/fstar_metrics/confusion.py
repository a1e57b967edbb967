"""Confusion-matrix construction from raw counts or thresholded scores.

Everything downstream (point metrics, sweeps, reports) derives from the
four counts held by :class:`ConfusionMatrix`. Counts are exact integers;
only the metric layer introduces floating point.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "THRESHOLD_RULE",
    "ScoredRecord",
    "ConfusionMatrix",
    "from_counts",
    "from_scored",
    "swap_classes",
]

#: Tie rule used when thresholding scores: predict class 1 iff score > t.
#: A score exactly equal to the threshold predicts class 0. This is a fixed
#: convention (documented, not configurable) so results stay reproducible.
THRESHOLD_RULE = "predict 1 iff score > t (strict)"


def _as_count(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ValueError(f"{name} must be an integer count, got {value!r}")
    v = int(value)
    if v < 0:
        raise ValueError(f"{name} must be non-negative, got {v}")
    return v


@dataclass(frozen=True)
class ScoredRecord:
    """One test-set object: a real-valued score plus its true class label.

    The score must be finite (NaN and infinities are rejected at
    construction) and the label must be 0 or 1.
    """

    score: float
    label: int

    def __post_init__(self):
        try:
            score = float(self.score)
        except (TypeError, ValueError):
            raise ValueError(f"score must be a real number, got {self.score!r}") from None
        if not math.isfinite(score):
            raise ValueError(f"score must be finite, got {self.score!r}")
        if isinstance(self.label, bool) or self.label not in (0, 1):
            raise ValueError(f"label must be 0 or 1, got {self.label!r}")
        object.__setattr__(self, "score", score)
        object.__setattr__(self, "label", int(self.label))


@dataclass(frozen=True)
class ConfusionMatrix:
    """The four counts of a two-class confusion table.

    ``tp``/``fp``/``fn``/``tn`` are non-negative integers; ``n`` is their
    exact sum (Python integers, so no overflow at any realistic size).
    """

    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self):
        for name in ("tp", "fp", "fn", "tn"):
            object.__setattr__(self, name, _as_count(name, getattr(self, name)))

    @property
    def n(self) -> int:
        """Total number of test-set objects."""
        return self.tp + self.fp + self.fn + self.tn


def from_counts(tp: int, fp: int, fn: int, tn: int) -> ConfusionMatrix:
    """Build a validated matrix from the four counts."""
    return ConfusionMatrix(tp=tp, fp=fp, fn=fn, tn=tn)


def _scores_labels(records: Iterable[ScoredRecord]) -> tuple[np.ndarray, np.ndarray]:
    records = list(records)
    scores = np.fromiter((r.score for r in records), dtype=float, count=len(records))
    labels = np.fromiter((r.label for r in records), dtype=np.int64, count=len(records))
    return scores, labels


def _tally(scores: np.ndarray, labels: np.ndarray, t: float) -> ConfusionMatrix:
    pred = scores > t
    pos = labels == 1
    tp = int(np.count_nonzero(pred & pos))
    fp = int(np.count_nonzero(pred & ~pos))
    fn = int(np.count_nonzero(~pred & pos))
    tn = int(np.count_nonzero(~pred & ~pos))
    return ConfusionMatrix(tp=tp, fp=fp, fn=fn, tn=tn)


def from_scored(records: Sequence[ScoredRecord], t: float) -> ConfusionMatrix:
    """Threshold scores at ``t`` and tally predictions against true labels.

    Predicted class is 1 iff score > t (see :data:`THRESHOLD_RULE`). An
    empty record list is legal and yields the all-zero matrix.
    """
    t = float(t)
    if not math.isfinite(t):
        raise ValueError(f"threshold must be finite, got {t!r}")
    scores, labels = _scores_labels(records)
    return _tally(scores, labels, t)


def swap_classes(m: ConfusionMatrix) -> ConfusionMatrix:
    """Relabel the classes: tp and tn exchange, fp and fn exchange."""
    return ConfusionMatrix(tp=m.tn, fp=m.fn, fn=m.fp, tn=m.tp)
