"""Binary-classification evaluation with the F / F' / F* measure family.

The library builds confusion matrices from counts or thresholded scores,
computes the standard single-threshold measures plus the F-measure's two
interpretable transformations (F' = F/(2(1-F)), F* = F/(2-F)), sweeps
metrics over threshold grids with crossing detection, computes rank-based
AUC, generates seeded synthetic score sets, and serializes everything to
CSV, JSON, and SVG. The ``fstar`` CLI wraps all of it.
"""

from ._version import __version__
from .confusion import (
    THRESHOLD_RULE,
    ConfusionMatrix,
    ScoredRecord,
    from_counts,
    from_scored,
    swap_classes,
)
from .metrics import (
    METRIC_IDS,
    METRICS,
    BetaWeight,
    MetricValue,
    ProportionPanel,
    cohen_kappa,
    f_beta,
    f_beta_from_counts,
    f_measure,
    f_prime,
    f_prime_beta,
    f_star,
    f_star_beta,
    matthews_coefficient,
    misclassification_rate,
    npv,
    precision,
    proportions,
    recall,
    specificity,
    transform_f_to_fstar,
    transform_fstar_to_f,
    youden_index,
)
from .ranking import auc
from .report import (
    ReportDocument,
    ScoresCsvError,
    read_scores_csv,
    write_curves_csv,
    write_report_json,
    write_scores_csv,
)
from .svg import render_sweep_svg, render_transform_svg
from .sweep import (
    CrossingSet,
    MetricCurve,
    ThresholdGrid,
    best_threshold,
    find_crossings,
    sweep,
)
from .synth import RNG_ALGORITHM, BetaParams, GeneratorSpec, generate_scores

__all__ = [
    "__version__",
    "THRESHOLD_RULE",
    "ConfusionMatrix",
    "ScoredRecord",
    "from_counts",
    "from_scored",
    "swap_classes",
    "METRIC_IDS",
    "METRICS",
    "BetaWeight",
    "MetricValue",
    "ProportionPanel",
    "cohen_kappa",
    "f_beta",
    "f_beta_from_counts",
    "f_measure",
    "f_prime",
    "f_prime_beta",
    "f_star",
    "f_star_beta",
    "matthews_coefficient",
    "misclassification_rate",
    "npv",
    "precision",
    "proportions",
    "recall",
    "specificity",
    "transform_f_to_fstar",
    "transform_fstar_to_f",
    "youden_index",
    "auc",
    "ReportDocument",
    "ScoresCsvError",
    "read_scores_csv",
    "write_curves_csv",
    "write_report_json",
    "write_scores_csv",
    "render_sweep_svg",
    "render_transform_svg",
    "CrossingSet",
    "MetricCurve",
    "ThresholdGrid",
    "best_threshold",
    "find_crossings",
    "sweep",
    "RNG_ALGORITHM",
    "BetaParams",
    "GeneratorSpec",
    "generate_scores",
]
