"""Report rendering: matplotlib figures plus delimited per-sample output."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .evaluation import EvalReport, SignificanceResult  # noqa: E402


def write_per_sample_csv(report: EvalReport, path: str | Path) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["sample_id", "metric_score", "human_score"])
        for p in report.per_sample:
            writer.writerow([p.sample_id, repr(p.metric_score), repr(p.human_score)])
    return path


def save_scatter(report: EvalReport, path: str | Path) -> Path:
    """Scatter of metric scores against human ratings with the correlations."""
    path = Path(path)
    human = np.array([p.human_score for p in report.per_sample])
    metric = np.array([p.metric_score for p in report.per_sample])
    fig, ax = plt.subplots(figsize=(5.0, 4.0))
    ax.scatter(human, metric, s=18, alpha=0.7, edgecolors="none")
    ax.set_xlabel("human rating")
    ax.set_ylabel("metric score")
    ax.set_title(f"n={report.n}  pearson={report.pearson:.3f}  "
                 f"spearman={report.spearman:.3f}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_null_deltas_csv(result: SignificanceResult, path: str | Path) -> Path:
    if result.null_deltas is None:
        raise ValueError("result carries no null distribution (keep_null=False)")
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "delta"])
        for i, d in enumerate(result.null_deltas):
            writer.writerow([i, repr(float(d))])
    return path


def save_null_histogram(result: SignificanceResult, path: str | Path) -> Path:
    """Histogram of the permutation null with the observed delta marked."""
    if result.null_deltas is None:
        raise ValueError("result carries no null distribution (keep_null=False)")
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5.0, 4.0))
    ax.hist(result.null_deltas, bins=40, color="#4878a8", alpha=0.85)
    ax.axvline(result.observed_delta, color="#c44e52", linestyle="--",
               label=f"observed = {result.observed_delta:.4f}")
    ax.set_xlabel(f"|Δ {result.stat}| under the null")
    ax.set_ylabel("count")
    ax.set_title(f"p = {result.p_value:.4f}  ({result.method}, "
                 f"{result.iterations} iterations)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
