"""Train each classifier on each dataset and export held-out score CSVs.

For every (dataset, classifier) pair the pipeline fits on a stratified
75/25 split (stratification keeps both labels in every test split),
scores the held-out records with class-1 probabilities, and writes
``<dataset>-<code>.csv`` in the primary toolkit's scores format
(header ``score,label``). A ``manifest.json`` records dataset sources
and sizes, toolkit versions, seeds, and any per-dataset failures;
a failing dataset never blocks the others.
"""

from __future__ import annotations

import csv
import json
import platform
import warnings
from pathlib import Path

import numpy as np
import sklearn
from sklearn.exceptions import ConvergenceWarning
from sklearn.model_selection import train_test_split

from .classifiers import CLASSIFIERS, ClassifierSpec
from .datasets import DATASETS, DatasetError, DatasetSpec

__all__ = ["generate_all"]

TOOL_NAME = "scoregen"
TOOL_VERSION = "0.1.0"


def _write_scores(path: Path, scores: np.ndarray, labels: np.ndarray) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["score", "label"])
        for s, lab in zip(scores, labels):
            writer.writerow([format(float(s), ".17g"), int(lab)])


def _score_pair(
    dataset: DatasetSpec,
    classifier: ClassifierSpec,
    X_train,
    X_test,
    y_train,
    split_seed: int,
) -> np.ndarray:
    estimator = classifier.build(split_seed)
    with warnings.catch_warnings():
        # default settings are kept faithful; lbfgs may stop at its default
        # iteration cap on unscaled features, which is fine for scoring
        warnings.simplefilter("ignore", ConvergenceWarning)
        estimator.fit(X_train, y_train)
    class_one = list(estimator.classes_).index(1)
    return estimator.predict_proba(X_test)[:, class_one]


def generate_all(
    output_dir,
    split_seed: int = 0,
    datasets=None,
    classifiers=None,
    data_dir=None,
) -> dict:
    """Produce every score CSV plus the manifest; returns the manifest.

    ``datasets`` and ``classifiers`` are optional name/code subsets;
    defaults cover all three datasets and all four classifiers.
    """
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    dataset_specs = [DATASETS[name] for name in (datasets or DATASETS)]
    classifier_specs = [CLASSIFIERS[code] for code in (classifiers or CLASSIFIERS)]

    manifest: dict = {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "split_seed": split_seed,
        "stratified": True,
        "score_type": "class-1 probability",
        "versions": {
            "python": platform.python_version(),
            "numpy": np.__version__,
            "scikit-learn": sklearn.__version__,
        },
        "classifiers": {c.code: c.kind for c in classifier_specs},
        "datasets": {},
        "files": [],
        "errors": {},
    }

    for dataset in dataset_specs:
        try:
            X, y = dataset.load(data_dir)
            if len(np.unique(y)) < 2:
                raise DatasetError(f"{dataset.name}: only one class present")
            X_train, X_test, y_train, y_test = train_test_split(
                X,
                y,
                test_size=dataset.split_fraction,
                random_state=split_seed,
                stratify=y,
            )
            manifest["datasets"][dataset.name] = {
                "source": dataset.source,
                "positive_label": dataset.positive,
                "split_fraction": dataset.split_fraction,
                "n_train": int(len(y_train)),
                "n_test": int(len(y_test)),
                "n_features": int(X.shape[1]),
            }
            for classifier in classifier_specs:
                scores = _score_pair(
                    dataset, classifier, X_train, X_test, y_train, split_seed
                )
                name = f"{dataset.name}-{classifier.code}.csv"
                _write_scores(out / name, scores, y_test)
                manifest["files"].append(name)
        except DatasetError as exc:
            manifest["errors"][dataset.name] = str(exc)

    with open(out / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    return manifest
