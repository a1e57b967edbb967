"""End-to-end gate: the full 3x4 export feeds the evaluation CLI cleanly.

The evaluation toolkit is exercised strictly through its command line and
file formats. For every emitted score file the swept F* curve must equal
the transformed F curve pointwise, and for every classifier pair within a
dataset the crossing brackets of the F panel must equal those of the F*
panel.
"""

import csv
import itertools
import json
import subprocess
import sys

import pytest

from scoregen import CLASSIFIER_CODES, DATASET_NAMES, generate_all


def fstar_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "fstar_metrics", *map(str, argv)],
        capture_output=True,
        text=True,
    )


@pytest.fixture(scope="module")
def full_export(tmp_path_factory, cache_dir):
    out = tmp_path_factory.mktemp("scores")
    manifest = generate_all(out, split_seed=0, data_dir=cache_dir)
    return out, manifest


def test_emits_twelve_valid_score_files(full_export):
    out, manifest = full_export
    assert manifest["errors"] == {}
    assert len(manifest["files"]) == 12
    expected = {f"{d}-{c}.csv" for d in DATASET_NAMES for c in CLASSIFIER_CODES}
    assert set(manifest["files"]) == expected
    for name in manifest["files"]:
        # the evaluation CLI runs its own reader; exit 0 means the file parses
        res = fstar_cli("eval", out / name, "--json")
        assert res.returncode == 0, res.stderr
        counts = json.loads(res.stdout)["counts"]
        assert counts["tp"] + counts["fn"] > 0 and counts["tn"] + counts["fp"] > 0
    print("ACCEPTANCE PASS  12 score CSVs produced and accepted by the evaluation CLI")


def _sweep_dataset(out, dataset):
    files = [out / f"{dataset}-{code}.csv" for code in CLASSIFIER_CODES]
    res = fstar_cli(
        "sweep",
        *files,
        "--metrics",
        "f,f_star",
        "--csv-out",
        out / f"{dataset}-curves.csv",
    )
    assert res.returncode == 0, res.stderr
    return out


def _curve_columns(path):
    series = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            series.setdefault(row["metric"], []).append((float(row["t"]), row["value"]))
    return series


def test_fstar_curve_is_transformed_f_curve(full_export):
    out, manifest = full_export
    worst = 0.0
    for dataset in DATASET_NAMES:
        _sweep_dataset(out, dataset)
        for code in CLASSIFIER_CODES:
            curves = _curve_columns(out / f"{dataset}-curves-{dataset}-{code}.csv")
            f_points, s_points = curves["f"], curves["f_star"]
            assert [t for t, _ in f_points] == [t for t, _ in s_points]
            for (_, f_cell), (_, s_cell) in zip(f_points, s_points):
                if f_cell == "NA" or s_cell == "NA":
                    assert f_cell == s_cell == "NA"
                    continue
                f, s = float(f_cell), float(s_cell)
                worst = max(worst, abs(s - f / (2.0 - f)))
    assert worst <= 1e-12
    print(f"ACCEPTANCE PASS  F* curves equal transformed F curves pointwise (max {worst:.2e})")


def test_crossing_sets_match_between_f_and_fstar_panels(full_export):
    out, manifest = full_export
    pairs_checked = 0
    for dataset in DATASET_NAMES:
        _sweep_dataset(out, dataset)
        doc = json.loads((out / f"{dataset}-curves.crossings.json").read_text())
        brackets = {(e["a"], e["b"], e["metric"]): e["brackets"] for e in doc["crossings"]}
        for a, b in itertools.combinations(
            (f"{dataset}-{code}" for code in CLASSIFIER_CODES), 2
        ):
            assert brackets[(a, b, "f")] == brackets[(a, b, "f_star")]
            pairs_checked += 1
    assert pairs_checked == len(DATASET_NAMES) * 6
    print(
        "ACCEPTANCE PASS  F and F* crossing brackets identical for all "
        f"{pairs_checked} classifier pairs"
    )
