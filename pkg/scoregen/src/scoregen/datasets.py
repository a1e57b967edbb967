"""The three benchmark datasets and their binary-target loaders.

Each loader returns an all-numeric feature matrix and a 0/1 label vector.
``breast-cancer`` ships with scikit-learn; the other two are read from a
local cache directory holding the canonical raw files:

* ``pima-indians-diabetes.csv`` — headerless, 9 numeric comma-separated
  columns, the last being the 0/1 outcome (1 = diabetic);
* ``german.data`` — whitespace-separated, 20 attribute columns (mixed
  categorical codes and integers) plus a final 1/2 class column
  (2 = bad credit, mapped to label 1).

Categorical attribute columns are one-hot encoded; the encoding depends
only on the file contents, so a given cache file always produces the
same matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np
import pandas as pd
from sklearn.datasets import load_breast_cancer

__all__ = ["DatasetError", "DatasetSpec", "DATASETS", "DATASET_NAMES"]


class DatasetError(RuntimeError):
    """A dataset could not be loaded; other datasets are unaffected."""


@dataclass(frozen=True)
class DatasetSpec:
    """One benchmark dataset: where it comes from and what label 1 means."""

    name: str
    source: str
    positive: str
    split_fraction: float = 0.25  # held-out share scored by the classifiers

    def load(self, data_dir: Path | None) -> tuple[np.ndarray, np.ndarray]:
        loader = _LOADERS[self.name]
        return loader(self, data_dir)


def _load_breast_cancer(spec: DatasetSpec, data_dir) -> tuple[np.ndarray, np.ndarray]:
    bunch = load_breast_cancer()
    # scikit-learn codes malignant as 0; the positive class here is malignant
    y = (bunch.target == 0).astype(np.int64)
    return bunch.data.astype(float), y


def _cache_file(spec: DatasetSpec, data_dir, filename: str) -> Path:
    if data_dir is None:
        raise DatasetError(
            f"{spec.name}: no data directory given and no network source available; "
            f"place {filename!r} in a cache directory and pass it via data_dir"
        )
    path = Path(data_dir) / filename
    if not path.is_file():
        raise DatasetError(f"{spec.name}: cache file {path} not found")
    return path


def _load_pima(spec: DatasetSpec, data_dir) -> tuple[np.ndarray, np.ndarray]:
    path = _cache_file(spec, data_dir, "pima-indians-diabetes.csv")
    try:
        table = np.loadtxt(path, delimiter=",", dtype=float)
    except ValueError as exc:
        raise DatasetError(f"{spec.name}: {path} is not numeric CSV: {exc}") from None
    if table.ndim != 2 or table.shape[1] != 9:
        raise DatasetError(f"{spec.name}: expected 9 columns, got shape {table.shape}")
    y = table[:, 8]
    if not np.isin(y, (0.0, 1.0)).all():
        raise DatasetError(f"{spec.name}: outcome column must be 0/1")
    return table[:, :8], y.astype(np.int64)


def _load_german(spec: DatasetSpec, data_dir) -> tuple[np.ndarray, np.ndarray]:
    path = _cache_file(spec, data_dir, "german.data")
    frame = pd.read_csv(path, sep=r"\s+", header=None)
    if frame.shape[1] != 21:
        raise DatasetError(f"{spec.name}: expected 21 columns, got {frame.shape[1]}")
    raw_class = frame.iloc[:, 20]
    if not raw_class.isin((1, 2)).all():
        raise DatasetError(f"{spec.name}: class column must be 1 or 2")
    y = (raw_class == 2).to_numpy(dtype=np.int64)  # 2 = bad credit -> label 1
    features = pd.get_dummies(frame.iloc[:, :20])
    return features.to_numpy(dtype=float), y


_LOADERS: dict[str, Callable] = {
    "breast-cancer": _load_breast_cancer,
    "pima-diabetes": _load_pima,
    "german-credit": _load_german,
}

DATASETS = {
    "breast-cancer": DatasetSpec(
        name="breast-cancer",
        source="scikit-learn bundled copy of the Wisconsin diagnostic data",
        positive="malignant",
    ),
    "pima-diabetes": DatasetSpec(
        name="pima-diabetes",
        source="cache file pima-indians-diabetes.csv",
        positive="diabetic",
    ),
    "german-credit": DatasetSpec(
        name="german-credit",
        source="cache file german.data",
        positive="bad credit",
    ),
}

DATASET_NAMES = tuple(DATASETS)
