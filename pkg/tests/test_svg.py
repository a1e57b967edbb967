import math
import re
import xml.etree.ElementTree as ET

import pytest

from fstar_metrics import (
    GeneratorSpec,
    MetricCurve,
    MetricValue,
    ThresholdGrid,
    generate_scores,
    render_sweep_svg,
    render_transform_svg,
    sweep,
    transform_f_to_fstar,
)
from fstar_metrics.svg import TRANSFORM_SAMPLES, fmt_px, sweep_xy, transform_xy

SVG_NS = "{http://www.w3.org/2000/svg}"


def all_elements(path):
    return list(ET.parse(path).getroot().iter())


class TestTransformFigure:
    @pytest.fixture()
    def figure(self, tmp_path):
        out = tmp_path / "transform.svg"
        render_transform_svg(out)
        return out

    def test_wellformed_with_one_path(self, figure):
        paths = [el for el in all_elements(figure) if el.tag == f"{SVG_NS}path"]
        assert len(paths) == 1
        assert paths[0].get("id") == "curve"

    def test_no_external_references(self, figure):
        for el in all_elements(figure):
            for attr in el.attrib:
                assert "href" not in attr.lower()

    def _curve_vertices(self, figure):
        [d] = [
            el.get("d") for el in all_elements(figure) if el.tag == f"{SVG_NS}path"
        ]
        pts = re.findall(r"[ML] ([0-9.+-]+),([0-9.+-]+)", d)
        return [(float(x), float(y)) for x, y in pts]

    def test_sampled_curve_matches_transform(self, figure):
        verts = self._curve_vertices(figure)
        assert len(verts) == TRANSFORM_SAMPLES + 1
        x0, y0 = transform_xy(0.0, 0.0)
        x1, _ = transform_xy(1.0, 0.0)
        _, y1 = transform_xy(0.0, 1.0)
        for px, py in verts:
            f = (px - x0) / (x1 - x0)
            value = (y0 - py) / (y0 - y1)
            assert abs(value - transform_f_to_fstar(min(max(f, 0.0), 1.0))) <= 1e-3

    def test_midpoint_encoded_at_one_third(self, figure):
        verts = self._curve_vertices(figure)
        xm, ym = verts[TRANSFORM_SAMPLES // 2]
        ex, ey = transform_xy(0.5, 1 / 3)
        assert abs(xm - ex) < 0.01 and abs(ym - ey) < 0.01

    def test_endpoints_at_plot_corners(self, figure):
        verts = self._curve_vertices(figure)
        assert verts[0] == transform_xy(0.0, 0.0)
        assert verts[-1] == transform_xy(1.0, 1.0)

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        render_transform_svg(a)
        render_transform_svg(b)
        assert a.read_bytes() == b.read_bytes()


def two_classifier_sets(grid=None):
    grid = grid or ThresholdGrid()
    sets = {}
    for name, seed in (("alpha", 21), ("bravo", 22)):
        recs = generate_scores(GeneratorSpec(n0=40, n1=40, seed=seed))
        sets[name] = sweep(recs, grid, ["f", "f_star"])
    return sets


class TestSweepFigure:
    def test_panels_and_polylines(self, tmp_path):
        out = tmp_path / "sweep.svg"
        sets = two_classifier_sets()
        render_sweep_svg(sets, out)
        root = ET.parse(out).getroot()
        panels = [el for el in root.iter() if el.tag == f"{SVG_NS}g"]
        assert [p.get("id") for p in panels] == ["panel-f", "panel-f_star"]
        for panel in panels:
            lines = [el for el in panel if el.tag == f"{SVG_NS}polyline"]
            assert sorted(el.get("data-series") for el in lines) == ["alpha", "bravo"]

    def test_vertices_match_curve_values_exactly(self, tmp_path):
        out = tmp_path / "sweep.svg"
        sets = two_classifier_sets(ThresholdGrid(0.0, 1.0, 0.125))
        render_sweep_svg(sets, out)
        root = ET.parse(out).getroot()
        panel_ids = ["f", "f_star"]
        for el in root.iter(f"{SVG_NS}polyline"):
            series = el.get("data-series")
            metric = el.get("data-metric")
            panel = panel_ids.index(metric)
            curve = next(c for c in sets[series] if c.metric_id == metric)
            expected = " ".join(
                f"{fmt_px(sweep_xy(panel, t, v.value)[0])},{fmt_px(sweep_xy(panel, t, v.value)[1])}"
                for t, v in curve.points
                if v.is_defined and 0.0 <= v.value <= 1.0
            )
            assert el.get("points") == expected

    def test_undefined_points_break_polyline(self, tmp_path):
        out = tmp_path / "gap.svg"
        ts = (0.0, 0.25, 0.5, 0.75, 1.0)
        pts = tuple(
            (t, MetricValue.undefined("gap") if t == 0.5 else MetricValue.defined(t / 2))
            for t in ts
        )
        render_sweep_svg({"solo": [MetricCurve("f", pts)]}, out)
        root = ET.parse(out).getroot()
        lines = [el for el in root.iter(f"{SVG_NS}polyline")]
        assert len(lines) == 2  # two runs around the gap
        assert all(el.get("data-series") == "solo" for el in lines)

    def test_values_above_axis_break_polyline(self, tmp_path):
        # the value axis is fixed to [0,1]; an off-scale ratio is not drawn
        out = tmp_path / "clip.svg"
        ts = (0.0, 0.5, 1.0)
        pts = tuple(
            (t, MetricValue.defined(1.5) if t == 0.5 else MetricValue.defined(0.4))
            for t in ts
        )
        render_sweep_svg({"solo": [MetricCurve("f_prime", pts)]}, out)
        root = ET.parse(out).getroot()
        circles = [el for el in root.iter(f"{SVG_NS}circle") if el.get("data-series")]
        assert len(circles) == 2  # two isolated in-range points remain

    def test_isolated_point_renders_as_circle(self, tmp_path):
        out = tmp_path / "dot.svg"
        pts = (
            (0.0, MetricValue.defined(0.5)),
            (0.5, MetricValue.undefined("x")),
            (1.0, MetricValue.undefined("x")),
        )
        render_sweep_svg({"solo": [MetricCurve("f", pts)]}, out)
        root = ET.parse(out).getroot()
        circles = [el for el in root.iter(f"{SVG_NS}circle") if el.get("data-series")]
        assert len(circles) == 1

    def test_mixed_grids_rejected(self, tmp_path):
        a = MetricCurve("f", ((0.0, MetricValue.defined(0.1)), (1.0, MetricValue.defined(0.2))))
        b = MetricCurve("f", ((0.0, MetricValue.defined(0.1)), (0.5, MetricValue.defined(0.2))))
        with pytest.raises(ValueError, match="grid"):
            render_sweep_svg({"a": [a], "b": [b]}, tmp_path / "x.svg")

    def test_empty_input_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="no curves"):
            render_sweep_svg({}, tmp_path / "x.svg")

    def test_deterministic_bytes(self, tmp_path):
        sets = two_classifier_sets()
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        render_sweep_svg(sets, a)
        render_sweep_svg(sets, b)
        assert a.read_bytes() == b.read_bytes()

    def test_no_external_references(self, tmp_path):
        out = tmp_path / "sweep.svg"
        render_sweep_svg(two_classifier_sets(), out)
        for el in all_elements(out):
            for attr in el.attrib:
                assert "href" not in attr.lower()
