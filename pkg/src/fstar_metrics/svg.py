"""Deterministic, dependency-free SVG figures.

Two renderers: the F-to-F* transform curve against the identity line, and
stacked per-metric threshold-sweep panels with one polyline per
classifier. Output is plain standalone SVG (no scripts, no external
references), byte-identical for identical inputs, so files are diffable
in tests.

The data-to-pixel mapping is linear and exposed (:func:`transform_xy`,
:func:`sweep_xy`, :func:`fmt_px`) so tests can verify plotted vertices
against the numbers that produced them.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .metrics import transform_f_to_fstar
from .sweep import MetricCurve

__all__ = [
    "render_transform_svg",
    "render_sweep_svg",
    "transform_xy",
    "sweep_xy",
    "fmt_px",
    "TRANSFORM_SAMPLES",
]

# shared horizontal geometry
_MARGIN_LEFT = 70.0
_MARGIN_RIGHT = 30.0
_PLOT_W = 600.0
_WIDTH = _MARGIN_LEFT + _PLOT_W + _MARGIN_RIGHT

# transform figure geometry (square unit plot)
_T_TOP = 30.0
_T_PLOT_H = 600.0
_T_HEIGHT = _T_TOP + _T_PLOT_H + 70.0

#: Number of curve steps in the transform figure; samples are i/TRANSFORM_SAMPLES.
TRANSFORM_SAMPLES = 1000

# sweep figure geometry
_S_TOP = 46.0  # legend strip lives above the first panel
_S_PANEL_H = 240.0
_S_PANEL_GAP = 58.0
_S_BOTTOM = 50.0

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_TICKS = (0.0, 0.5, 1.0)


def fmt_px(v: float) -> str:
    """Pixel coordinate rendering used everywhere in the output."""
    return f"{v:.6f}"


def _esc(text: str) -> str:
    return (
        str(text)
        .replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def transform_xy(f: float, value: float) -> tuple[float, float]:
    """Map a (F, F*) point of the transform figure to pixel coordinates."""
    return _MARGIN_LEFT + f * _PLOT_W, _T_TOP + (1.0 - value) * _T_PLOT_H


def _panel_top(index: int) -> float:
    return _S_TOP + index * (_S_PANEL_H + _S_PANEL_GAP)


def sweep_xy(panel_index: int, t: float, value: float) -> tuple[float, float]:
    """Map a (t, value) point of sweep panel ``panel_index`` to pixels."""
    return _MARGIN_LEFT + t * _PLOT_W, _panel_top(panel_index) + (1.0 - value) * _S_PANEL_H


def _frame(x0: float, y0: float, w: float, h: float) -> str:
    return (
        f'<rect x="{fmt_px(x0)}" y="{fmt_px(y0)}" width="{fmt_px(w)}" height="{fmt_px(h)}" '
        'fill="none" stroke="#333333" stroke-width="1"/>'
    )


def _axis_ticks(y_top: float, plot_h: float) -> list[str]:
    parts: list[str] = []
    y_bottom = y_top + plot_h
    for v in _TICKS:
        x = _MARGIN_LEFT + v * _PLOT_W
        y = y_top + (1.0 - v) * plot_h
        label = format(v, "g")
        parts.append(
            f'<line x1="{fmt_px(x)}" y1="{fmt_px(y_bottom)}" x2="{fmt_px(x)}" '
            f'y2="{fmt_px(y_bottom + 5)}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{fmt_px(x)}" y="{fmt_px(y_bottom + 20)}" font-size="12" '
            f'text-anchor="middle" fill="#333333">{label}</text>'
        )
        parts.append(
            f'<line x1="{fmt_px(_MARGIN_LEFT - 5)}" y1="{fmt_px(y)}" x2="{fmt_px(_MARGIN_LEFT)}" '
            f'y2="{fmt_px(y)}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{fmt_px(_MARGIN_LEFT - 10)}" y="{fmt_px(y + 4)}" font-size="12" '
            f'text-anchor="end" fill="#333333">{label}</text>'
        )
    return parts


def _document(width: float, height: float, body: list[str]) -> str:
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
        f'<rect x="0" y="0" width="{width:g}" height="{height:g}" fill="#ffffff"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def render_transform_svg(path) -> None:
    """Write the F-to-F* curve (f/(2-f) on [0,1]) with the identity line.

    The curve is sampled at f = i/1000 and is the document's only
    ``path`` element; the identity diagonal is a dashed ``line``.
    """
    body: list[str] = []
    x00, y00 = transform_xy(0.0, 0.0)
    x11, y11 = transform_xy(1.0, 1.0)
    body.append(_frame(_MARGIN_LEFT, _T_TOP, _PLOT_W, _T_PLOT_H))
    body.extend(_axis_ticks(_T_TOP, _T_PLOT_H))
    body.append(
        f'<line x1="{fmt_px(x00)}" y1="{fmt_px(y00)}" x2="{fmt_px(x11)}" y2="{fmt_px(y11)}" '
        'stroke="#999999" stroke-width="1" stroke-dasharray="6,4"/>'
    )
    cmds: list[str] = []
    for i in range(TRANSFORM_SAMPLES + 1):
        f = i / TRANSFORM_SAMPLES
        x, y = transform_xy(f, transform_f_to_fstar(f))
        cmds.append(f"{'M' if not cmds else 'L'} {fmt_px(x)},{fmt_px(y)}")
    body.append(
        f'<path id="curve" d="{" ".join(cmds)}" fill="none" stroke="#1f77b4" stroke-width="2"/>'
    )
    xlab, _ = transform_xy(0.5, 0.0)
    body.append(
        f'<text x="{fmt_px(xlab)}" y="{fmt_px(_T_TOP + _T_PLOT_H + 45)}" font-size="14" '
        'text-anchor="middle" fill="#333333">F</text>'
    )
    body.append(
        f'<text x="{fmt_px(_MARGIN_LEFT - 45)}" y="{fmt_px(_T_TOP + _T_PLOT_H / 2)}" '
        'font-size="14" text-anchor="middle" fill="#333333">F*</text>'
    )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_document(_WIDTH, _T_HEIGHT, body))


def _segments(points) -> tuple[list[list[tuple[float, float]]], int]:
    """Split curve points into plottable runs at undefined/off-scale values."""
    runs: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    skipped = 0
    for t, v in points:
        if v.is_defined and 0.0 <= v.value <= 1.0:
            current.append((t, v.value))
        else:
            skipped += 1
            if current:
                runs.append(current)
                current = []
    if current:
        runs.append(current)
    return runs, skipped


def render_sweep_svg(curve_sets: Mapping[str, Sequence[MetricCurve]], path) -> None:
    """Write one panel per metric with one polyline per named classifier.

    ``curve_sets`` maps a classifier name to its curves (one per metric);
    every curve must share one grid and the panels use fixed [0,1] axes
    for both threshold and value. Points that are undefined,
    positive-infinite, or outside [0,1] break the polyline into separate
    runs (isolated points render as small circles).
    """
    if not curve_sets:
        raise ValueError("no curves to render")
    grid: tuple[float, ...] | None = None
    panel_ids: list[str] = []
    for name, curves in curve_sets.items():
        if not curves:
            raise ValueError(f"classifier {name!r} has no curves")
        for c in curves:
            if grid is None:
                grid = c.thresholds()
            elif c.thresholds() != grid:
                raise ValueError("curves do not share a common grid")
            if c.metric_id not in panel_ids:
                panel_ids.append(c.metric_id)

    height = _panel_top(len(panel_ids) - 1) + _S_PANEL_H + _S_BOTTOM
    body: list[str] = []

    # legend strip
    lx = _MARGIN_LEFT
    for i, name in enumerate(curve_sets):
        color = _PALETTE[i % len(_PALETTE)]
        body.append(
            f'<line x1="{fmt_px(lx)}" y1="20" x2="{fmt_px(lx + 24)}" y2="20" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        body.append(
            f'<text x="{fmt_px(lx + 30)}" y="24" font-size="12" fill="#333333">{_esc(name)}</text>'
        )
        lx += 42.0 + 7.0 * len(str(name))

    for p, metric_id in enumerate(panel_ids):
        top = _panel_top(p)
        panel: list[str] = [f'<g id="panel-{_esc(metric_id)}">']
        panel.append(
            f'<text x="{fmt_px(_MARGIN_LEFT)}" y="{fmt_px(top - 8)}" font-size="13" '
            f'fill="#333333">{_esc(metric_id)}</text>'
        )
        panel.append(_frame(_MARGIN_LEFT, top, _PLOT_W, _S_PANEL_H))
        panel.extend(_axis_ticks(top, _S_PANEL_H))
        panel.append(
            f'<text x="{fmt_px(_MARGIN_LEFT + _PLOT_W / 2)}" y="{fmt_px(top + _S_PANEL_H + 40)}" '
            'font-size="13" text-anchor="middle" fill="#333333">t</text>'
        )
        for i, (name, curves) in enumerate(curve_sets.items()):
            color = _PALETTE[i % len(_PALETTE)]
            curve = next((c for c in curves if c.metric_id == metric_id), None)
            if curve is None:
                continue
            runs, _ = _segments(curve.points)
            for run in runs:
                pts = " ".join(
                    f"{fmt_px(sweep_xy(p, t, v)[0])},{fmt_px(sweep_xy(p, t, v)[1])}"
                    for t, v in run
                )
                if len(run) == 1:
                    x, y = sweep_xy(p, run[0][0], run[0][1])
                    panel.append(
                        f'<circle cx="{fmt_px(x)}" cy="{fmt_px(y)}" r="2.5" fill="{color}" '
                        f'data-series="{_esc(name)}" data-metric="{_esc(metric_id)}"/>'
                    )
                else:
                    panel.append(
                        f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5" '
                        f'data-series="{_esc(name)}" data-metric="{_esc(metric_id)}"/>'
                    )
        panel.append("</g>")
        body.extend(panel)

    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_document(_WIDTH, height, body))
