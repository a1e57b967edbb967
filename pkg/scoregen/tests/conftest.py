import numpy as np
import pytest


def write_pima_cache(data_dir, n=400, seed=7):
    """Stand-in for the canonical headerless 9-column numeric file."""
    rng = np.random.default_rng(seed)
    y = rng.integers(0, 2, size=n)
    shift = rng.uniform(0.3, 1.2, size=8)
    X = np.abs(rng.normal(0.0, 1.0, size=(n, 8)) + y[:, None] * shift)
    lines = [
        ",".join(f"{v:.4f}" for v in row) + f",{int(lab)}" for row, lab in zip(X, y)
    ]
    path = data_dir / "pima-indians-diabetes.csv"
    path.write_text("\n".join(lines) + "\n")
    return path


def write_german_cache(data_dir, n=300, seed=8):
    """Stand-in for the canonical whitespace-separated 21-column file."""
    rng = np.random.default_rng(seed)
    hidden = rng.normal(0.0, 1.0, size=n)
    rows = []
    for i in range(n):
        cells = []
        for col in range(20):
            if col % 3 == 0:  # categorical attribute codes
                level = int(min(3, max(0, round(hidden[i] + rng.normal(0, 1)))) + 1)
                cells.append(f"A{col + 1}{level}")
            else:
                cells.append(str(int(abs(hidden[i] * 10 + rng.normal(0, 5)) + col)))
        klass = 2 if hidden[i] + rng.normal(0, 0.8) > 0 else 1
        cells.append(str(klass))
        rows.append(" ".join(cells))
    path = data_dir / "german.data"
    path.write_text("\n".join(rows) + "\n")
    return path


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """Cache directory with stand-in copies of both file-based datasets."""
    d = tmp_path_factory.mktemp("dataset-cache")
    write_pima_cache(d)
    write_german_cache(d)
    return d
