"""The four reference classifiers, at library-default settings.

Only two deviations from bare defaults, both required for the output
contract: the SVM turns on probability calibration so its scores are
probabilities rather than unbounded margins, and every estimator with a
``random_state`` gets one derived from the run seed so a seed pins the
output bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

from sklearn.ensemble import RandomForestClassifier
from sklearn.linear_model import LogisticRegression
from sklearn.svm import SVC
from sklearn.tree import DecisionTreeClassifier

__all__ = ["ClassifierSpec", "CLASSIFIERS", "CLASSIFIER_CODES"]


@dataclass(frozen=True)
class ClassifierSpec:
    """One classifier kind: its short file code and estimator factory."""

    kind: str
    code: str

    def build(self, seed: int):
        if self.code == "dt":
            return DecisionTreeClassifier(random_state=seed)
        if self.code == "lr":
            return LogisticRegression()
        if self.code == "rf":
            return RandomForestClassifier(random_state=seed)
        if self.code == "svm":
            return SVC(probability=True, random_state=seed)
        raise ValueError(f"unknown classifier code {self.code!r}")


CLASSIFIERS = {
    "dt": ClassifierSpec(kind="decision-tree", code="dt"),
    "lr": ClassifierSpec(kind="logistic-regression", code="lr"),
    "rf": ClassifierSpec(kind="random-forest", code="rf"),
    "svm": ClassifierSpec(kind="support-vector-machine", code="svm"),
}

CLASSIFIER_CODES = tuple(CLASSIFIERS)
