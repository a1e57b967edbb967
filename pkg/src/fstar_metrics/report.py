"""File formats: scores CSV in, curves CSV and report JSON out.

Formats
-------
scores CSV   header ``score,label``; one record per row; extra columns
             are ignored. Labels are 0/1, scores finite decimals.
curves CSV   long format ``t,metric,value``; numbers are rendered with 17
             significant digits so the underlying doubles round-trip
             bit-exactly; positive infinity renders as ``inf`` and
             undefined values as ``NA``.
report JSON  one document per evaluation; metric values are a JSON number,
             the string ``"inf"``, or ``{"NA": reason}``. The mapping is
             lossless in both directions (see :func:`metric_value_to_json`
             / :func:`metric_value_from_json`).
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from ._version import __version__
from .confusion import ConfusionMatrix, ScoredRecord
from .metrics import MetricValue
from .sweep import MetricCurve

__all__ = [
    "TOOL_NAME",
    "ScoresCsvError",
    "read_scores_csv",
    "write_scores_csv",
    "write_curves_csv",
    "format_value",
    "metric_value_to_json",
    "metric_value_from_json",
    "ReportDocument",
    "write_report_json",
]

TOOL_NAME = "fstar-metrics"


class ScoresCsvError(ValueError):
    """A scores CSV failed validation; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def read_scores_csv(path) -> list[ScoredRecord]:
    """Read ``score,label`` rows in file order.

    The header row is required; extra columns are ignored; CRLF and a
    trailing newline are tolerated. Any bad cell raises
    :class:`ScoresCsvError` naming the offending line.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise ScoresCsvError("missing header row 'score,label'", line=1)
        names = [c.strip() for c in header]
        if "score" not in names or "label" not in names:
            raise ScoresCsvError(
                f"header must name 'score' and 'label' columns, got {','.join(names)!r}",
                line=1,
            )
        score_col = names.index("score")
        label_col = names.index("label")
        records: list[ScoredRecord] = []
        for row in reader:
            line = reader.line_num
            if not row:
                continue
            if len(row) <= max(score_col, label_col):
                raise ScoresCsvError(f"expected at least {max(score_col, label_col) + 1} fields", line)
            raw_score = row[score_col].strip()
            raw_label = row[label_col].strip()
            try:
                score = float(raw_score)
            except ValueError:
                raise ScoresCsvError(f"unparseable score {raw_score!r}", line) from None
            if not math.isfinite(score):
                raise ScoresCsvError(f"score must be finite, got {raw_score!r}", line)
            if raw_label not in ("0", "1"):
                raise ScoresCsvError(f"label must be 0 or 1, got {raw_label!r}", line)
            records.append(ScoredRecord(score, int(raw_label)))
    return records


def write_scores_csv(records: Sequence[ScoredRecord], path) -> None:
    """Write records as ``score,label`` rows; scores round-trip bit-exactly."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["score", "label"])
        for r in records:
            writer.writerow([format(r.score, ".17g"), r.label])


def format_value(v: MetricValue) -> str:
    """Render a metric value for a CSV cell: 17-digit decimal, inf, or NA."""
    if v.is_defined:
        return format(v.value, ".17g")
    if v.is_positive_infinite:
        return "inf"
    return "NA"


def write_curves_csv(curves: Sequence[MetricCurve], path) -> None:
    """Write curves in long format ``t,metric,value``, metric by metric.

    All curves must share one grid; defined values round-trip bit-exactly
    through the 17-significant-digit rendering.
    """
    curves = list(curves)
    if not curves:
        raise ValueError("no curves to write")
    grid = curves[0].thresholds()
    for c in curves[1:]:
        if c.thresholds() != grid:
            raise ValueError("curves do not share a common grid")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "metric", "value"])
        for c in curves:
            for t, v in c.points:
                # repr(t) is the shortest exact decimal for the threshold;
                # values get the fixed 17-significant-digit form
                writer.writerow([repr(t), c.metric_id, format_value(v)])


def metric_value_to_json(v: MetricValue) -> Any:
    """JSON encoding: number | "inf" | {"NA": reason}."""
    if v.is_defined:
        return v.value
    if v.is_positive_infinite:
        return "inf"
    return {"NA": v.reason or ""}


def metric_value_from_json(obj: Any) -> MetricValue:
    """Inverse of :func:`metric_value_to_json`."""
    if isinstance(obj, bool):
        raise ValueError(f"not a metric value encoding: {obj!r}")
    if isinstance(obj, (int, float)):
        return MetricValue.defined(float(obj))
    if obj == "inf":
        return MetricValue.positive_infinite()
    if isinstance(obj, dict) and set(obj) == {"NA"}:
        return MetricValue.undefined(obj["NA"])
    raise ValueError(f"not a metric value encoding: {obj!r}")


@dataclass(frozen=True)
class ReportDocument:
    """A metric panel for one confusion matrix, plus provenance."""

    matrix: ConfusionMatrix
    metrics: Mapping[str, MetricValue]
    provenance: Mapping[str, Any]

    def to_json_obj(self) -> dict[str, Any]:
        """Plain dict with stable key order, ready for ``json.dump``."""
        m = self.matrix
        return {
            "tool": TOOL_NAME,
            "version": __version__,
            "provenance": dict(self.provenance),
            "counts": {"tp": m.tp, "fp": m.fp, "fn": m.fn, "tn": m.tn, "n": m.n},
            "metrics": {
                name: metric_value_to_json(v) for name, v in self.metrics.items()
            },
        }


def write_report_json(doc: ReportDocument, path) -> None:
    """Serialize the report with stable field ordering."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc.to_json_obj(), fh, indent=2)
        fh.write("\n")
