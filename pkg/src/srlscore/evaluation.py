"""Correlation with human ratings and paired permutation significance tests.

The permutation test compares two metrics against shared gold ratings:
each iteration swaps the two metrics' scores per instance with probability
1/2 and recomputes the absolute correlation difference. Iteration masks
come from independent counter-based RNG streams keyed by (seed, iteration),
so chunked/parallel evaluation reproduces the serial p-value exactly.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.stats import rankdata

from .annotation import parse_document
from .errors import SrlScoreError, UndefinedCorrelationError
from .scoring import ScoringConfig, score_documents

DEFAULT_ITERATIONS = 10_000
DEFAULT_SEED = 256
STATS = ("pearson", "spearman")

_CHUNK = 1024
_EXHAUSTIVE_MAX_N = 20


def _as_vector(x, name: str) -> np.ndarray:
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    return v


def _check_pair(x: np.ndarray, y: np.ndarray) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise ValueError("need at least 2 paired observations")


def _pearson_rows(rows: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Row-wise Pearson correlation against y; zero-variance rows give 0.0."""
    rc = rows - rows.mean(axis=1, keepdims=True)
    yc = y - y.mean()
    num = rc @ yc
    den = np.sqrt((rc * rc).sum(axis=1) * (yc * yc).sum())
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.where(den > 0.0, num / np.where(den > 0.0, den, 1.0), 0.0)
    return r


def _stat_rows(rows: np.ndarray, y: np.ndarray, stat: str) -> np.ndarray:
    if stat == "spearman":
        rows = rankdata(rows, axis=1, method="average")
        y = rankdata(y, method="average")
    return _pearson_rows(rows, y)


def pearson(x, y) -> float:
    """Sample Pearson correlation. Constant input raises UndefinedCorrelationError."""
    xv, yv = _as_vector(x, "x"), _as_vector(y, "y")
    _check_pair(xv, yv)
    for name, v in (("x", xv), ("y", yv)):
        if np.all(v == v[0]):
            raise UndefinedCorrelationError(
                f"correlation undefined: {name} is constant")
    return float(_pearson_rows(xv[None, :], yv)[0])


def spearman(x, y) -> float:
    """Pearson correlation of average-tied rank vectors."""
    xv, yv = _as_vector(x, "x"), _as_vector(y, "y")
    _check_pair(xv, yv)
    for name, v in (("x", xv), ("y", yv)):
        if np.all(v == v[0]):
            raise UndefinedCorrelationError(
                f"correlation undefined: {name} is constant")
    return float(_pearson_rows(rankdata(xv, method="average")[None, :],
                               rankdata(yv, method="average"))[0])


def _stat_scalar(x: np.ndarray, y: np.ndarray, stat: str) -> float:
    return pearson(x, y) if stat == "pearson" else spearman(x, y)


def bonferroni(p_values, alpha: float) -> list[tuple[float, bool]]:
    """Per-comparison (adjusted_alpha, significant) with adjusted = alpha / k."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    k = len(p_values)
    if k < 1:
        raise ValueError("need at least one p-value")
    adjusted = alpha / k
    return [(adjusted, p < adjusted) for p in p_values]


@dataclass
class SignificanceResult:
    """Outcome of one paired permutation test."""

    stat: str
    observed_delta: float
    p_value: float
    iterations: int
    seed: int
    method: str  # "monte_carlo" | "exhaustive"
    corr_a: float
    corr_b: float
    n: int
    bonferroni_alpha: float | None = None
    significant: bool | None = None
    null_deltas: np.ndarray | None = None

    def to_dict(self) -> dict:
        out = {
            "stat": self.stat,
            "corr_a": self.corr_a,
            "corr_b": self.corr_b,
            "observed_delta": self.observed_delta,
            "p_value": self.p_value,
            "iterations": self.iterations,
            "seed": self.seed,
            "method": self.method,
            "n": self.n,
        }
        if self.bonferroni_alpha is not None:
            out["bonferroni_alpha"] = self.bonferroni_alpha
            out["significant"] = self.significant
        return out


def _iteration_mask(seed: int, iteration: int, n: int) -> np.ndarray:
    """Swap mask for one iteration from a Philox stream keyed by (seed, iteration)."""
    words_needed = (n + 63) // 64
    gen = np.random.Generator(np.random.Philox(key=[seed, iteration]))
    words = gen.integers(0, 2**64, size=words_needed, dtype=np.uint64, endpoint=False)
    bits = ((words[:, None] >> np.arange(64, dtype=np.uint64)) & np.uint64(1))
    return bits.astype(bool).reshape(-1)[:n]


def _chunk_masks(seed: int, lo: int, hi: int, n: int) -> np.ndarray:
    return np.stack([_iteration_mask(seed, i, n) for i in range(lo, hi)])


def _count_chunk(masks: np.ndarray, a: np.ndarray, b: np.ndarray, h: np.ndarray,
                 stat: str, observed: float,
                 keep_null: bool) -> tuple[int, np.ndarray | None]:
    a_perm = np.where(masks, b, a)
    b_perm = np.where(masks, a, b)
    deltas = np.abs(_stat_rows(a_perm, h, stat) - _stat_rows(b_perm, h, stat))
    return int((deltas >= observed).sum()), (deltas if keep_null else None)


def permutation_test(metric_a, metric_b, human, stat: str = "pearson",
                     iterations: int = DEFAULT_ITERATIONS, seed: int = DEFAULT_SEED,
                     exhaustive: bool = False, jobs: int = 1,
                     keep_null: bool = False) -> SignificanceResult:
    """Paired per-instance metric-swap permutation test (two-sided).

    Monte Carlo p-values use add-one smoothing: (count_ge + 1)/(iterations + 1).
    With exhaustive=True all 2^n swap patterns are enumerated (n <= 20) and
    p = count_ge / 2^n. Results are fully reproducible from (seed, iterations)
    and independent of `jobs`. Replicates whose swapped vector is constant
    contribute a correlation of 0.0.
    """
    if stat not in STATS:
        raise ValueError(f"stat must be one of {STATS}")
    a, b = _as_vector(metric_a, "metric_a"), _as_vector(metric_b, "metric_b")
    h = _as_vector(human, "human")
    _check_pair(a, b)
    _check_pair(a, h)
    if np.all(h == h[0]):
        raise UndefinedCorrelationError("correlation undefined: human vector is constant")
    corr_a = _stat_scalar(a, h, stat)
    corr_b = _stat_scalar(b, h, stat)
    observed = abs(corr_a - corr_b)
    n = len(a)

    if exhaustive:
        if n > _EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive enumeration limited to n <= {_EXHAUSTIVE_MAX_N}")
        total = 2 ** n
        patterns = np.arange(total, dtype=np.uint64)
        count = 0
        null_parts = []
        for lo in range(0, total, _CHUNK):
            chunk = patterns[lo:lo + _CHUNK]
            masks = ((chunk[:, None] >> np.arange(n, dtype=np.uint64)) & np.uint64(1)).astype(bool)
            c, deltas = _count_chunk(masks, a, b, h, stat, observed, keep_null)
            count += c
            if keep_null:
                null_parts.append(deltas)
        return SignificanceResult(
            stat=stat, observed_delta=observed, p_value=count / total,
            iterations=total, seed=seed, method="exhaustive",
            corr_a=corr_a, corr_b=corr_b, n=n,
            null_deltas=np.concatenate(null_parts) if keep_null else None)

    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    bounds = [(lo, min(lo + _CHUNK, iterations)) for lo in range(0, iterations, _CHUNK)]

    def run(span: tuple[int, int]) -> tuple[int, np.ndarray | None]:
        masks = _chunk_masks(seed, span[0], span[1], n)
        return _count_chunk(masks, a, b, h, stat, observed, keep_null)

    if jobs > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(run, bounds))
    else:
        parts = [run(span) for span in bounds]
    count = sum(c for c, _ in parts)
    null = np.concatenate([d for _, d in parts]) if keep_null else None
    return SignificanceResult(
        stat=stat, observed_delta=observed,
        p_value=(count + 1) / (iterations + 1),
        iterations=iterations, seed=seed, method="monte_carlo",
        corr_a=corr_a, corr_b=corr_b, n=n, null_deltas=null)


@dataclass(frozen=True)
class RatedSample:
    """One evaluation instance: annotated document paths plus a gold rating."""

    sample_id: str
    source: str
    summary: str
    human_score: float


def load_rated_samples(path: str | Path) -> list[RatedSample]:
    """Read rated samples from a JSON-lines file.

    Each line: {"sample_id": str, "source": path, "summary": path,
    "human_score": finite number}. Aggregation of multi-rater scores is the
    responsibility of whatever produced the file (see the `convert` command).
    """
    samples = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as e:
                raise ValueError(f"{path}: line {lineno}: invalid JSON: {e.msg}") from e
            try:
                sample = RatedSample(
                    sample_id=str(row["sample_id"]),
                    source=str(row["source"]),
                    summary=str(row["summary"]),
                    human_score=float(row["human_score"]),
                )
            except KeyError as e:
                raise ValueError(f"{path}: line {lineno}: missing key {e}") from e
            if not math.isfinite(sample.human_score):
                raise ValueError(
                    f"{path}: line {lineno}: human_score must be finite "
                    f"(sample {sample.sample_id!r})")
            samples.append(sample)
    return samples


@dataclass(frozen=True)
class PerSampleScore:
    sample_id: str
    metric_score: float
    human_score: float


@dataclass(frozen=True)
class EvalReport:
    """Correlation of metric scores with human ratings over a dataset."""

    pearson: float
    spearman: float
    n: int
    per_sample: tuple[PerSampleScore, ...]
    excluded: tuple[tuple[str, str], ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "pearson": self.pearson,
            "spearman": self.spearman,
            "n": self.n,
            "excluded_count": len(self.excluded),
            "excluded": [{"sample_id": s, "error": e} for s, e in self.excluded],
            "per_sample": [
                {"sample_id": p.sample_id, "metric_score": p.metric_score,
                 "human_score": p.human_score}
                for p in self.per_sample
            ],
        }


def _score_sample(sample: RatedSample, cfg: ScoringConfig,
                  annotations_dir: str | Path | None) -> float:
    def resolve(p: str) -> Path:
        path = Path(p)
        if annotations_dir is not None and not path.is_absolute():
            path = Path(annotations_dir) / path
        return path

    source = parse_document(resolve(sample.source).read_bytes())
    summary = parse_document(resolve(sample.summary).read_bytes())
    return score_documents(source, summary, cfg).overall


def evaluate_dataset(samples: list[RatedSample], cfg: ScoringConfig,
                     annotations_dir: str | Path | None = None,
                     jobs: int = 1) -> EvalReport:
    """Score every sample and correlate metric output with human ratings.

    Samples whose annotation files are missing or invalid are excluded and
    reported; at least two scorable samples are required. A constant metric
    vector surfaces as UndefinedCorrelationError.
    """

    def run(sample: RatedSample) -> tuple[RatedSample, float | None, str | None]:
        try:
            return sample, _score_sample(sample, cfg, annotations_dir), None
        except (OSError, SrlScoreError) as e:
            return sample, None, str(e)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, samples))
    else:
        results = [run(s) for s in samples]

    per_sample = []
    excluded = []
    for sample, score, err in results:
        if err is None:
            per_sample.append(PerSampleScore(sample.sample_id, score, sample.human_score))
        else:
            excluded.append((sample.sample_id, err))
    if len(per_sample) < 2:
        raise ValueError(
            f"need at least 2 scorable samples, got {len(per_sample)} "
            f"({len(excluded)} excluded)")
    metric = [p.metric_score for p in per_sample]
    human = [p.human_score for p in per_sample]
    return EvalReport(
        pearson=pearson(metric, human),
        spearman=spearman(metric, human),
        n=len(per_sample),
        per_sample=tuple(per_sample),
        excluded=tuple(excluded),
    )
