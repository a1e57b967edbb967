"""Metric curves along a threshold grid and crossing detection.

A sweep thresholds one score set at every grid point and evaluates the
requested metrics there. Crossings between two classifiers' curves are
reported as open grid brackets (t_i, t_{i+1}) where the sign of the curve
difference flips; they are never interpolated, because bracket positions
are what stays invariant under monotone transformations of the metric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .confusion import ScoredRecord, _scores_labels, _tally
from .metrics import METRICS, METRIC_IDS, MetricValue

__all__ = [
    "ThresholdGrid",
    "MetricCurve",
    "CrossingSet",
    "sweep",
    "find_crossings",
    "best_threshold",
]

# slack for counting whole steps; grids are far coarser than 1e-9
_GRID_EPS = 1e-9


@dataclass(frozen=True)
class ThresholdGrid:
    """Arithmetic grid start, start+step, ... capped at stop; stop is always
    included as the final point. Default 0 to 1 in steps of 0.01.
    """

    start: float = 0.0
    stop: float = 1.0
    step: float = 0.01

    def __post_init__(self):
        for name in ("start", "stop", "step"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)
        if not self.start < self.stop:
            raise ValueError(f"start must be below stop, got {self.start} >= {self.stop}")
        if self.step <= 0.0:
            raise ValueError(f"step must be positive, got {self.step}")

    def points(self) -> tuple[float, ...]:
        whole = int(math.floor((self.stop - self.start) / self.step + _GRID_EPS))
        ts = [self.start + i * self.step for i in range(whole + 1)]
        if ts[-1] > self.stop:  # float overshoot of an exact multiple
            ts[-1] = self.stop
        if ts[-1] != self.stop:
            ts.append(self.stop)
        return tuple(ts)


@dataclass(frozen=True)
class MetricCurve:
    """One metric evaluated along a grid: ordered (threshold, value) pairs."""

    metric_id: str
    points: tuple[tuple[float, MetricValue], ...]

    def __post_init__(self):
        ts = [t for t, _ in self.points]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise ValueError("curve thresholds must be strictly increasing")

    def thresholds(self) -> tuple[float, ...]:
        return tuple(t for t, _ in self.points)

    def values(self) -> tuple[MetricValue, ...]:
        return tuple(v for _, v in self.points)


@dataclass(frozen=True)
class CrossingSet:
    """Open grid-adjacent intervals where two curves' difference changes sign."""

    brackets: tuple[tuple[float, float], ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.brackets)


def sweep(
    records: Sequence[ScoredRecord],
    grid: ThresholdGrid,
    metrics: Sequence[str],
) -> list[MetricCurve]:
    """Evaluate the named metrics at every grid threshold.

    Curves come back in request order; an empty metric list yields an
    empty curve list. Deterministic: identical inputs give bit-identical
    curves.
    """
    if not records:
        raise ValueError("sweep requires at least one record")
    names = list(metrics)
    for name in names:
        if name not in METRICS:
            raise ValueError(
                f"unknown metric {name!r}; valid metrics: {', '.join(METRIC_IDS)}"
            )
    scores, labels = _scores_labels(records)
    ts = grid.points()
    series: dict[str, list[tuple[float, MetricValue]]] = {name: [] for name in names}
    for t in ts:
        m = _tally(scores, labels, t)
        for name in names:
            series[name].append((t, METRICS[name](m)))
    return [MetricCurve(name, tuple(series[name])) for name in names]


def find_crossings(a: MetricCurve, b: MetricCurve) -> CrossingSet:
    """Grid brackets where sign(a - b) flips between strictly + and strictly -.

    Points where the difference is exactly zero, or where either value is
    not defined, are skipped when tracking the last known sign; a
    touch-without-cross therefore does not register. Each bracket is the
    grid-adjacent open interval ending at the point where the new sign
    first appears.
    """
    if a.metric_id != b.metric_id:
        raise ValueError(
            f"curves measure different metrics: {a.metric_id!r} vs {b.metric_id!r}"
        )
    ts = a.thresholds()
    if ts != b.thresholds():
        raise ValueError("curves were evaluated on different grids")
    brackets: list[tuple[float, float]] = []
    last_sign = 0
    for i, (va, vb) in enumerate(zip(a.values(), b.values())):
        if not (va.is_defined and vb.is_defined):
            continue
        diff = va.value - vb.value
        if diff == 0.0:
            continue
        sign = 1 if diff > 0.0 else -1
        if last_sign != 0 and sign != last_sign:
            brackets.append((ts[i - 1], ts[i]))
        last_sign = sign
    return CrossingSet(tuple(brackets))


def best_threshold(c: MetricCurve) -> tuple[float, MetricValue]:
    """Grid point maximizing the defined values; ties go to the smallest t."""
    best: tuple[float, MetricValue] | None = None
    for t, v in c.points:
        if v.is_defined and (best is None or v.value > best[1].value):
            best = (t, v)
    if best is None:
        raise ValueError("curve entirely undefined")
    return best
