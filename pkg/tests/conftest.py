import numpy as np
import pytest

from fstar_metrics import ConfusionMatrix, ScoredRecord


@pytest.fixture
def m1() -> ConfusionMatrix:
    """The worked-by-hand matrix used across the suite."""
    return ConfusionMatrix(tp=8, fp=3, fn=1, tn=5)


def records(pairs) -> list[ScoredRecord]:
    return [ScoredRecord(score, label) for score, label in pairs]


#: Shared 4-record score set: thresholding at 0.5 gives tp=2 fp=1 tn=1 fn=0.
FOUR_RECORDS = ((0.9, 1), (0.2, 0), (0.6, 0), (0.7, 1))


def random_matrices(seed: int, count: int, high: int = 1000, require_relevant: bool = True):
    """Seeded stream of random matrices with counts in [0, high].

    With ``require_relevant``, rows with tp = fn = fp = 0 are redrawn so F,
    F' and F* are all defined or positive-infinite.
    """
    rng = np.random.default_rng(seed)
    counts = rng.integers(0, high + 1, size=(count, 4))
    if require_relevant:
        bad = (counts[:, 0] + counts[:, 1] + counts[:, 2]) == 0
        while bad.any():
            counts[bad] = rng.integers(0, high + 1, size=(int(bad.sum()), 4))
            bad = (counts[:, 0] + counts[:, 1] + counts[:, 2]) == 0
    return [
        ConfusionMatrix(tp=int(tp), fp=int(fp), fn=int(fn), tn=int(tn))
        for tp, fp, fn, tn in counts
    ]
