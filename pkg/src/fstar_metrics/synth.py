"""Seeded synthetic score generation for desk-scale experiments.

Scores for each class are drawn from a Beta distribution, so they live in
the open unit interval like calibrated classifier probabilities, and the
shape parameters let tests construct curve pairs that do and do not cross.

Determinism contract: draws come from ``numpy.random.Generator`` seeded
with the spec's seed on the PCG64 bit generator (class-0 scores first,
then class-1), which is platform-independent for a fixed numpy version.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

import numpy as np

from .confusion import ScoredRecord

__all__ = ["RNG_ALGORITHM", "BetaParams", "GeneratorSpec", "generate_scores"]

#: The pinned pseudo-random algorithm behind :func:`generate_scores`.
RNG_ALGORITHM = "numpy.random.Generator(PCG64)"


@dataclass(frozen=True)
class BetaParams:
    """Shape parameters of a Beta distribution; both strictly positive."""

    alpha: float
    beta: float

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v <= 0.0:
                raise ValueError(f"{name} must be a finite positive real, got {v!r}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class GeneratorSpec:
    """Sizes, per-class score distributions, and seed for one synthetic set."""

    n0: int
    n1: int
    dist0: BetaParams = BetaParams(2.0, 5.0)
    dist1: BetaParams = BetaParams(5.0, 2.0)
    seed: int = 0

    def __post_init__(self):
        for name in ("n0", "n1"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, numbers.Integral) or int(v) < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        s = self.seed
        if isinstance(s, bool) or not isinstance(s, numbers.Integral):
            raise ValueError(f"seed must be an integer, got {s!r}")
        s = int(s)
        if not 0 <= s < 2**64:
            raise ValueError(f"seed must fit an unsigned 64-bit integer, got {s}")
        object.__setattr__(self, "seed", s)


def _open_unit_beta(rng: np.random.Generator, dist: BetaParams, n: int) -> np.ndarray:
    x = rng.beta(dist.alpha, dist.beta, size=n)
    # extreme shapes can underflow to 0.0 or round to 1.0; redraw those
    bad = ~((x > 0.0) & (x < 1.0))
    while bad.any():
        x[bad] = rng.beta(dist.alpha, dist.beta, size=int(bad.sum()))
        bad = ~((x > 0.0) & (x < 1.0))
    return x


def generate_scores(spec: GeneratorSpec) -> list[ScoredRecord]:
    """Draw n0 class-0 and n1 class-1 records, reproducibly per seed."""
    rng = np.random.default_rng(spec.seed)
    records: list[ScoredRecord] = []
    for label, n, dist in ((0, spec.n0, spec.dist0), (1, spec.n1, spec.dist1)):
        for score in _open_unit_beta(rng, dist, n):
            records.append(ScoredRecord(float(score), label))
    return records
