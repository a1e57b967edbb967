"""Score-CSV export pipeline: four reference classifiers on three
public benchmark datasets, consumable by the fstar-metrics CLI."""

from .classifiers import CLASSIFIER_CODES, CLASSIFIERS, ClassifierSpec
from .datasets import DATASET_NAMES, DATASETS, DatasetError, DatasetSpec
from .pipeline import generate_all

__all__ = [
    "CLASSIFIER_CODES",
    "CLASSIFIERS",
    "ClassifierSpec",
    "DATASET_NAMES",
    "DATASETS",
    "DatasetError",
    "DatasetSpec",
    "generate_all",
]
