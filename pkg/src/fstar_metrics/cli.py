"""Command-line surface: evaluate, sweep, transform, synthesize, render.

Exit codes: 0 success, 1 runtime/IO failures (missing or malformed
files), 2 usage errors (bad flags). Data goes to stdout, messages to
stderr. Set NO_COLOR (or redirect stdout) to disable the light ANSI
styling of tables.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from ._version import __version__
from .confusion import ConfusionMatrix, from_counts, from_scored
from .metrics import (
    METRIC_IDS,
    METRICS,
    BetaWeight,
    f_beta_from_counts,
    f_prime_beta,
    f_star_beta,
)
from .report import (
    ReportDocument,
    TOOL_NAME,
    read_scores_csv,
    write_curves_csv,
    write_report_json,
    write_scores_csv,
)
from .svg import render_sweep_svg, render_transform_svg
from .sweep import ThresholdGrid, find_crossings, sweep
from .synth import BetaParams, GeneratorSpec, generate_scores

__all__ = ["main"]

DEFAULT_METRICS = "f,f_star"
DEFAULT_GRID = "0:1:0.01"


class UsageError(Exception):
    """Flag-level problem; maps to exit code 2."""


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _parse_metrics(text: str) -> list[str]:
    if text.strip() == "all":
        return list(METRIC_IDS)
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise UsageError("empty metric list")
    for name in names:
        if name not in METRICS:
            raise UsageError(
                f"unknown metric {name!r}; valid metrics: {', '.join(METRIC_IDS)}"
            )
    return names


def _parse_grid(text: str) -> ThresholdGrid:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise UsageError(f"grid must be three numbers start:stop:step, got {text!r}") from None
    try:
        return ThresholdGrid(start, stop, step)
    except ValueError as exc:
        raise UsageError(f"bad grid: {exc}") from None


def _styled(text: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\x1b[1m{text}\x1b[0m"


def _panel(matrix: ConfusionMatrix, names: list[str], beta: float | None) -> dict:
    values = {name: METRICS[name](matrix) for name in names}
    if beta is not None:
        w = _beta_weight(beta)
        values["f_beta"] = f_beta_from_counts(matrix, w)
        values["f_prime_beta"] = f_prime_beta(matrix, w)
        values["f_star_beta"] = f_star_beta(matrix, w)
    return values


def _beta_weight(beta: float) -> BetaWeight:
    try:
        return BetaWeight(beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit_report(doc: ReportDocument, args) -> None:
    if args.out:
        write_report_json(doc, args.out)
    if args.json:
        print(json.dumps(doc.to_json_obj(), indent=2))
    elif not args.out:
        _print_table(doc)


def _print_table(doc: ReportDocument) -> None:
    m = doc.matrix
    print(f"tp={m.tp}  fp={m.fp}  fn={m.fn}  tn={m.tn}  n={m.n}")
    width = max(len(name) for name in doc.metrics)
    for name, v in doc.metrics.items():
        if v.is_defined:
            cell = format(v.value, ".6g")
        elif v.is_positive_infinite:
            cell = "inf"
        else:
            cell = f"NA ({v.reason})"
        print(f"{_styled(name.ljust(width))}  {cell}")


def _provenance(**fields) -> dict:
    out = {"input": None, "threshold": None, "grid": None, "beta": None}
    out.update(fields)
    return {k: v for k, v in out.items() if v is not None or k in ("input", "threshold")}


def _cmd_matrix(args) -> int:
    names = _parse_metrics(args.metrics)
    if args.beta is not None:
        _beta_weight(args.beta)
    matrix = from_counts(tp=args.tp, fp=args.fp, fn=args.fn, tn=args.tn)
    doc = ReportDocument(
        matrix=matrix,
        metrics=_panel(matrix, names, args.beta),
        provenance=_provenance(beta=args.beta),
    )
    _emit_report(doc, args)
    return 0


def _cmd_eval(args) -> int:
    names = _parse_metrics(args.metrics)
    if not (-float("inf") < args.t < float("inf")):
        raise UsageError(f"threshold must be finite, got {args.t}")
    if args.beta is not None:
        _beta_weight(args.beta)
    records = read_scores_csv(args.scores)
    matrix = from_scored(records, args.t)
    doc = ReportDocument(
        matrix=matrix,
        metrics=_panel(matrix, names, args.beta),
        provenance=_provenance(input=str(args.scores), threshold=args.t, beta=args.beta),
    )
    _emit_report(doc, args)
    return 0


def _series_names(paths: list[str]) -> list[str]:
    stems = [Path(p).stem for p in paths]
    if len(set(stems)) == len(stems):
        return stems
    return [f"{stem}#{i}" for i, stem in enumerate(stems)]


def _curves_csv_path(base: str, name: str, multiple: bool) -> Path:
    base_path = Path(base)
    if not multiple:
        return base_path
    return base_path.with_name(f"{base_path.stem}-{name}{base_path.suffix or '.csv'}")


def _cmd_sweep(args) -> int:
    grid = _parse_grid(args.grid)
    names = _parse_metrics(args.metrics)
    series_names = _series_names(args.scores)
    curve_sets: dict[str, list] = {}
    for path, name in zip(args.scores, series_names):
        records = read_scores_csv(path)
        curve_sets[name] = sweep(records, grid, names)
    multiple = len(args.scores) > 1
    for name in series_names:
        write_curves_csv(curve_sets[name], _curves_csv_path(args.csv_out, name, multiple))
    if args.svg_out:
        render_sweep_svg(curve_sets, args.svg_out)
    if multiple:
        crossings_out = args.crossings_out or str(
            Path(args.csv_out).with_suffix(".crossings.json")
        )
        _write_crossings(curve_sets, grid, names, crossings_out)
    return 0


def _write_crossings(curve_sets, grid: ThresholdGrid, metric_names, path) -> None:
    by_metric = {
        name: {m.metric_id: m for m in curves} for name, curves in curve_sets.items()
    }
    entries = []
    for a, b in itertools.combinations(curve_sets, 2):
        for metric in metric_names:
            crossings = find_crossings(by_metric[a][metric], by_metric[b][metric])
            entries.append(
                {
                    "a": a,
                    "b": b,
                    "metric": metric,
                    "brackets": [[lo, hi] for lo, hi in crossings.brackets],
                }
            )
    doc = {
        "tool": TOOL_NAME,
        "version": __version__,
        "grid": {"start": grid.start, "stop": grid.stop, "step": grid.step},
        "metrics": list(metric_names),
        "series": list(curve_sets),
        "crossings": entries,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _cmd_transform(args) -> int:
    # parse the flag as an exact decimal so e.g. 0.8 means 8/10, not the
    # nearest double; the result is then correctly rounded to one double
    raw = args.f if args.f is not None else args.fstar
    try:
        value = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a number, got {raw!r}") from None
    if not 0 <= value <= 1:
        name = "f" if args.f is not None else "fstar"
        raise UsageError(f"{name} must lie in [0, 1], got {raw}")
    if args.f is not None:
        result = value / (2 - value)
    else:
        result = 2 * value / (1 + value)
    print(repr(float(result)))
    return 0


def _cmd_synth(args) -> int:
    try:
        spec = GeneratorSpec(
            n0=args.n0,
            n1=args.n1,
            dist0=BetaParams(args.alpha0, args.beta0),
            dist1=BetaParams(args.alpha1, args.beta1),
            seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    write_scores_csv(generate_scores(spec), args.out)
    return 0


def _cmd_figure(args) -> int:
    render_transform_svg(args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fstar",
        description="Binary-classification evaluation: confusion metrics, "
        "the F / F' / F* family, threshold sweeps, and reports.",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="metric panel from raw confusion counts")
    p.add_argument("--tp", type=_nonneg_int, required=True)
    p.add_argument("--fp", type=_nonneg_int, required=True)
    p.add_argument("--fn", type=_nonneg_int, required=True)
    p.add_argument("--tn", type=_nonneg_int, required=True)
    p.add_argument("--metrics", default="all", help="comma list or 'all' (default: all)")
    p.add_argument("--beta", type=float, default=None, help="add beta-weighted F panel")
    p.add_argument("--json", action="store_true", help="JSON report on stdout")
    p.add_argument("--out", default=None, help="write JSON report to this path")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("eval", help="metric panel from a scores CSV at one threshold")
    p.add_argument("scores", help="CSV with header score,label")
    p.add_argument("--t", type=float, default=0.5, help="threshold (default 0.5); predict 1 iff score > t")
    p.add_argument("--metrics", default=DEFAULT_METRICS, help=f"comma list or 'all' (default: {DEFAULT_METRICS})")
    p.add_argument("--beta", type=float, default=None, help="add beta-weighted F panel")
    p.add_argument("--json", action="store_true", help="JSON report on stdout")
    p.add_argument("--out", default=None, help="write JSON report to this path")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sweep", help="metric curves over a threshold grid, with crossings")
    p.add_argument("scores", nargs="+", help="one or more scores CSVs")
    p.add_argument("--grid", default=DEFAULT_GRID, help=f"start:stop:step (default {DEFAULT_GRID})")
    p.add_argument("--metrics", default=DEFAULT_METRICS, help=f"comma list or 'all' (default: {DEFAULT_METRICS})")
    p.add_argument("--csv-out", required=True, help="curves CSV path (suffixed per input when several)")
    p.add_argument("--svg-out", default=None, help="also render sweep panels to this SVG")
    p.add_argument(
        "--crossings-out",
        default=None,
        help="crossing report path for >=2 inputs (default: csv-out with .crossings.json)",
    )
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("transform", help="map F to F* or back")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--f", default=None, help="F value to transform to F* (exact decimal)")
    group.add_argument("--fstar", default=None, help="F* value to transform to F (exact decimal)")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("synth", help="write a seeded synthetic scores CSV")
    p.add_argument("--n0", type=_nonneg_int, required=True, help="number of class-0 records")
    p.add_argument("--n1", type=_nonneg_int, required=True, help="number of class-1 records")
    p.add_argument("--alpha0", type=float, default=2.0, help="class-0 Beta alpha (default 2)")
    p.add_argument("--beta0", type=float, default=5.0, help="class-0 Beta beta (default 5)")
    p.add_argument("--alpha1", type=float, default=5.0, help="class-1 Beta alpha (default 5)")
    p.add_argument("--beta1", type=float, default=2.0, help="class-1 Beta beta (default 2)")
    p.add_argument("--seed", type=_nonneg_int, default=0, help="generator seed (default 0)")
    p.add_argument("--out", required=True, help="output scores CSV path")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("figure", help="render the F-to-F* transform curve as SVG")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=_cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fstar: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"fstar: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
