from __future__ import annotations

import csv

import pytest

from srlscore.evaluation import (EvalReport, PerSampleScore, permutation_test)
from srlscore import figures


@pytest.fixture()
def report() -> EvalReport:
    per_sample = tuple(
        PerSampleScore(f"s{i}", i / 10.0, (10 - i) / 10.0) for i in range(8))
    return EvalReport(pearson=-1.0, spearman=-1.0, n=8, per_sample=per_sample)


def test_per_sample_csv(report, tmp_path):
    path = figures.write_per_sample_csv(report, tmp_path / "per_sample.csv")
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["sample_id", "metric_score", "human_score"]
    assert len(rows) == 9
    assert float(rows[1][1]) == 0.0


def test_scatter_renders(report, tmp_path):
    path = figures.save_scatter(report, tmp_path / "scatter.png")
    assert path.exists() and path.stat().st_size > 0


def test_null_histogram_and_csv(tmp_path):
    result = permutation_test([0.9, 0.2, 0.6, 0.4, 0.8], [0.1, 0.7, 0.3, 0.5, 0.2],
                              [1, 2, 3, 4, 5], iterations=64, seed=7, keep_null=True)
    png = figures.save_null_histogram(result, tmp_path / "null.png")
    assert png.exists() and png.stat().st_size > 0
    path = figures.write_null_deltas_csv(result, tmp_path / "null.csv")
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert len(rows) == 65


def test_null_outputs_require_kept_null(tmp_path):
    result = permutation_test([0.9, 0.2, 0.6], [0.1, 0.7, 0.3], [1, 2, 3],
                              iterations=16, seed=7)
    with pytest.raises(ValueError):
        figures.save_null_histogram(result, tmp_path / "x.png")
    with pytest.raises(ValueError):
        figures.write_null_deltas_csv(result, tmp_path / "x.csv")
