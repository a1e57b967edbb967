"""Single-threshold performance measures over a confusion matrix.

Covers the four column/row proportions, the F-measure and its two
transformations:

* ``F  = 2*tp / (fn + fp + 2*tp)``, the harmonic mean of precision and
  recall;
* ``F' = tp / (fn + fp) = F / (2*(1 - F))``, correctly classified class-1
  objects per misclassified object (an unbounded ratio);
* ``F* = tp / (fn + fp + tp) = F / (2 - F)``, the proportion of relevant
  classifications that are correct, where a relevant classification is an
  object that is truly class 1, predicted class 1, or both. Identical to
  the Jaccard coefficient and to ``tp / (n - tn)``.

plus beta-weighted variants, misclassification rate, Cohen's kappa, the
Youden index, and the Matthews correlation coefficient.

Numerical policy: every count-based metric is reduced to a single
floating-point division of exact integer (or exactly representable)
operands, so the closed-form identities between the measures hold to
within a few ulp and the beta=1 variants reproduce their unweighted
counterparts bit-for-bit.

Degenerate 0/0 cases never return a silent 0 or 1: they yield an
``undefined`` :class:`MetricValue` carrying a machine-readable reason.
``F'`` with zero misclassifications yields a distinguished
positive-infinite state rather than a float ``inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .confusion import ConfusionMatrix

__all__ = [
    "MetricValue",
    "BetaWeight",
    "ProportionPanel",
    "precision",
    "recall",
    "specificity",
    "npv",
    "proportions",
    "f_measure",
    "f_beta",
    "f_beta_from_counts",
    "f_prime",
    "f_star",
    "f_prime_beta",
    "f_star_beta",
    "transform_f_to_fstar",
    "transform_fstar_to_f",
    "misclassification_rate",
    "cohen_kappa",
    "youden_index",
    "matthews_coefficient",
    "METRICS",
    "METRIC_IDS",
]

_DEFINED = "defined"
_POS_INF = "inf"
_UNDEFINED = "na"


@dataclass(frozen=True)
class MetricValue:
    """Outcome of a metric: a finite value, positive infinity, or undefined.

    Use the classmethod constructors; ``kind`` is one of ``"defined"``,
    ``"inf"``, ``"na"``.
    """

    kind: str
    value: float | None = None
    reason: str | None = None

    @classmethod
    def defined(cls, value: float) -> "MetricValue":
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"defined metric value must be finite, got {value!r}")
        return cls(_DEFINED, value=value)

    @classmethod
    def positive_infinite(cls) -> "MetricValue":
        return cls(_POS_INF)

    @classmethod
    def undefined(cls, reason: str) -> "MetricValue":
        return cls(_UNDEFINED, reason=reason)

    @property
    def is_defined(self) -> bool:
        return self.kind == _DEFINED

    @property
    def is_positive_infinite(self) -> bool:
        return self.kind == _POS_INF

    @property
    def is_undefined(self) -> bool:
        return self.kind == _UNDEFINED

    def expect(self) -> float:
        """Return the finite value, raising if the metric is not defined."""
        if not self.is_defined:
            raise ValueError(f"metric value is not defined: {self}")
        return self.value  # type: ignore[return-value]


@dataclass(frozen=True)
class BetaWeight:
    """Recall-vs-precision weight for the F family; beta=1 is unweighted.

    Recall is weighted beta times as heavily as precision, entering the
    formulas as beta squared.
    """

    beta: float = 1.0

    def __post_init__(self):
        b = float(self.beta)
        if not math.isfinite(b) or b <= 0.0:
            raise ValueError(f"beta must be a finite positive real, got {self.beta!r}")
        object.__setattr__(self, "beta", b)

    @property
    def beta_sq(self) -> float:
        return self.beta * self.beta


@dataclass(frozen=True)
class ProportionPanel:
    """The four row/column proportions of the confusion table."""

    precision: MetricValue
    recall: MetricValue
    specificity: MetricValue
    npv: MetricValue


def _ratio(num: int, den: int, reason: str) -> MetricValue:
    # exact integer operands, one correctly rounded division
    if den == 0:
        return MetricValue.undefined(reason)
    return MetricValue.defined(num / den)


def precision(m: ConfusionMatrix) -> MetricValue:
    """tp / (tp + fp): fraction of predicted positives that are correct."""
    return _ratio(m.tp, m.tp + m.fp, "empty denominator: precision")


def recall(m: ConfusionMatrix) -> MetricValue:
    """tp / (tp + fn): fraction of true positives predicted positive."""
    return _ratio(m.tp, m.tp + m.fn, "empty denominator: recall")


def specificity(m: ConfusionMatrix) -> MetricValue:
    """tn / (tn + fp)."""
    return _ratio(m.tn, m.tn + m.fp, "empty denominator: specificity")


def npv(m: ConfusionMatrix) -> MetricValue:
    """tn / (tn + fn): negative predictive value."""
    return _ratio(m.tn, m.tn + m.fn, "empty denominator: npv")


def proportions(m: ConfusionMatrix) -> ProportionPanel:
    """All four proportions; zero denominators come back undefined."""
    return ProportionPanel(
        precision=precision(m),
        recall=recall(m),
        specificity=specificity(m),
        npv=npv(m),
    )


def f_measure(m: ConfusionMatrix) -> MetricValue:
    """F = 2*tp / (fn + fp + 2*tp), the harmonic mean of precision and recall.

    Undefined only when tp = fn = fp = 0 (no object is truly positive or
    predicted positive). Ignores tn entirely.
    """
    return _ratio(2 * m.tp, m.fn + m.fp + 2 * m.tp, "no relevant objects")


def f_prime(m: ConfusionMatrix) -> MetricValue:
    """F' = tp / (fn + fp): correct class-1 classifications per error.

    Positive-infinite when there are no misclassifications but tp > 0;
    undefined when tp = fn = fp = 0.
    """
    mis = m.fn + m.fp
    if mis == 0:
        if m.tp > 0:
            return MetricValue.positive_infinite()
        return MetricValue.undefined("no relevant objects")
    return MetricValue.defined(m.tp / mis)


def f_star(m: ConfusionMatrix) -> MetricValue:
    """F* = tp / (fn + fp + tp), the proportion of relevant classifications
    that are correct; equal to F/(2-F), to tp/(n-tn) and to the Jaccard
    coefficient of the predicted-positive and truly-positive sets.
    """
    return _ratio(m.tp, m.tp + m.fn + m.fp, "no relevant classifications")


def f_beta(p: float, r: float, w: BetaWeight) -> MetricValue:
    """Weighted F from precision and recall: (1+b^2)*p*r / (b^2*p + r).

    Undefined when the denominator is zero (p = r = 0). beta = 1 recovers
    the harmonic mean 2*p*r/(p+r) exactly.
    """
    p = float(p)
    r = float(r)
    for name, v in (("p", p), ("r", r)):
        if not math.isfinite(v) or v < 0.0 or v > 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {v!r}")
    b2 = w.beta_sq
    den = b2 * p + r
    if den == 0.0:
        return MetricValue.undefined("precision and recall both zero")
    return MetricValue.defined((1.0 + b2) * p * r / den)


def f_beta_from_counts(m: ConfusionMatrix, w: BetaWeight) -> MetricValue:
    """Weighted F in count form: (1+b^2)*tp / ((1+b^2)*tp + b^2*fn + fp).

    Agrees with :func:`f_beta` on the matrix's precision and recall
    whenever those are defined, and stays defined in the tp = 0 corner
    where precision is not.
    """
    b2 = w.beta_sq
    num = (1.0 + b2) * m.tp
    den = num + b2 * m.fn + m.fp
    if den == 0.0:
        return MetricValue.undefined("no relevant objects")
    return MetricValue.defined(num / den)


def f_star_beta(m: ConfusionMatrix, w: BetaWeight) -> MetricValue:
    """Weighted F*: F_b/(2-F_b), i.e. (1+b^2)*tp / ((1+b^2)*tp + 2*b^2*fn + 2*fp).

    beta = 1 reproduces :func:`f_star` bit-for-bit.
    """
    b2 = w.beta_sq
    num = (1.0 + b2) * m.tp
    den = num + 2.0 * (b2 * m.fn) + 2.0 * m.fp
    if den == 0.0:
        return MetricValue.undefined("no relevant classifications")
    return MetricValue.defined(num / den)


def f_prime_beta(m: ConfusionMatrix, w: BetaWeight) -> MetricValue:
    """Weighted F': F_b/(2*(1-F_b)), i.e. (1+b^2)*tp / (2*(b^2*fn + fp)).

    Positive-infinite when F_b = 1 (no weighted misclassification mass but
    tp > 0); beta = 1 reproduces :func:`f_prime` bit-for-bit.
    """
    b2 = w.beta_sq
    mis = b2 * m.fn + m.fp
    if mis == 0.0:
        if m.tp > 0:
            return MetricValue.positive_infinite()
        return MetricValue.undefined("no relevant objects")
    return MetricValue.defined((1.0 + b2) * m.tp / (2.0 * mis))


def transform_f_to_fstar(f):
    """Map an F value to F* = f / (2 - f).

    Strictly increasing on [0, 1] with fixed points 0 and 1; the output
    never exceeds the input. Accepts a scalar or an ndarray (elementwise).
    """
    arr = np.asarray(f, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("f must lie in [0, 1]")
    out = arr / (2.0 - arr)
    return float(out) if np.ndim(f) == 0 else out


def transform_fstar_to_f(s):
    """Inverse of :func:`transform_f_to_fstar`: f = 2*s / (1 + s).

    Accepts a scalar or an ndarray (elementwise).
    """
    arr = np.asarray(s, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("s must lie in [0, 1]")
    out = 2.0 * arr / (1.0 + arr)
    return float(out) if np.ndim(s) == 0 else out


def misclassification_rate(m: ConfusionMatrix) -> MetricValue:
    """(fn + fp) / n; undefined on an empty test set."""
    return _ratio(m.fn + m.fp, m.n, "empty test set")


def cohen_kappa(m: ConfusionMatrix) -> MetricValue:
    """Chance-adjusted proportion correctly classified.

    kappa = (p_o - p_e) / (1 - p_e) with observed agreement
    p_o = (tp+tn)/n and marginal-product chance agreement
    p_e = ((tp+fp)(tp+fn) + (tn+fn)(tn+fp)) / n^2. Computed as a single
    division of exact integers. Undefined when n = 0 or p_e = 1.
    """
    n = m.n
    if n == 0:
        return MetricValue.undefined("empty test set")
    chance = (m.tp + m.fp) * (m.tp + m.fn) + (m.tn + m.fn) * (m.tn + m.fp)
    num = n * (m.tp + m.tn) - chance  # n^2 * (p_o - p_e)
    den = n * n - chance  # n^2 * (1 - p_e)
    if den == 0:
        return MetricValue.undefined("chance agreement is total")
    return MetricValue.defined(num / den)


def youden_index(m: ConfusionMatrix) -> MetricValue:
    """J = recall + specificity - 1 = (tp*tn - fn*fp) / ((tp+fn)*(tn+fp)).

    Undefined when either proportion is (one class absent).
    """
    pos = m.tp + m.fn
    neg = m.tn + m.fp
    if pos == 0:
        return MetricValue.undefined("empty denominator: recall")
    if neg == 0:
        return MetricValue.undefined("empty denominator: specificity")
    return MetricValue.defined((m.tp * m.tn - m.fn * m.fp) / (pos * neg))


def matthews_coefficient(m: ConfusionMatrix) -> MetricValue:
    """MCC = (tp*tn - fp*fn) / sqrt((tp+fp)(tp+fn)(tn+fp)(tn+fn)).

    Undefined when any of the four marginal factors is zero.
    """
    marginals = (
        ("tp+fp", m.tp + m.fp),
        ("tp+fn", m.tp + m.fn),
        ("tn+fp", m.tn + m.fp),
        ("tn+fn", m.tn + m.fn),
    )
    product = 1
    for name, value in marginals:
        if value == 0:
            return MetricValue.undefined(f"empty marginal: {name}")
        product *= value
    # exact integer product, one sqrt: perfect separations give exactly +-1
    return MetricValue.defined((m.tp * m.tn - m.fp * m.fn) / math.sqrt(product))


#: Metric id -> evaluator, in report order. These ids are the vocabulary of
#: the sweep module, the CLI --metrics flag, and the curves CSV.
METRICS = {
    "precision": precision,
    "recall": recall,
    "specificity": specificity,
    "npv": npv,
    "f": f_measure,
    "f_prime": f_prime,
    "f_star": f_star,
    "misclassification_rate": misclassification_rate,
    "kappa": cohen_kappa,
    "youden": youden_index,
    "mcc": matthews_coefficient,
}

METRIC_IDS = tuple(METRICS)
