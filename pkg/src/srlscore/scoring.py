"""Weighted tuple-matching scorer.

A summary tuple's support given a source tuple is the weighted sum of
per-role similarities over the roles present in the summary tuple; a role
the source tuple lacks contributes zero. Dynamic weighting re-normalizes
the weights over the present roles only, so omissions are not penalized.
The document score is the mean over summary tuples of the best support
across all source tuples.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .annotation import AnnotatedDocument
from .coref import DEFAULT_EXPANSION_CAP, expand_document
from .errors import ConfigError
from .facts import (AGENT, PATIENT, RELATION, ROLE_NAMES, FactDatabase, FactTuple,
                    extract_tuples, reduce_database)
from .similarity import SimilarityFunction

WEIGHTING_MODES = ("static", "dynamic")
VARIANTS = ("full", "triplet", "goodrich")

_TRIPLET_ROLES = frozenset({AGENT, RELATION, PATIENT})


def equal_weights() -> tuple[float, ...]:
    return (1.0 / 7.0,) * 7


def triplet_weights() -> tuple[float, ...]:
    w = [0.0] * 7
    for i in _TRIPLET_ROLES:
        w[i] = 1.0 / 3.0
    return tuple(w)


@dataclass(frozen=True)
class ScoringConfig:
    """Weight vector, weighting mode, similarity, variant, and coref toggle.

    Weights follow the fixed role order (agent=0 .. location=6), must be
    non-negative and sum to 1 within 1e-9. The triplet and goodrich
    variants require zero weights outside agent/relation/patient.
    """

    weights: tuple[float, ...]
    weighting_mode: str
    similarity: SimilarityFunction
    variant: str = "full"
    coref: bool = False
    coref_cap: int = DEFAULT_EXPANSION_CAP

    def __post_init__(self):
        if len(self.weights) != 7:
            raise ConfigError(f"expected 7 weights, got {len(self.weights)}")
        if any(w < 0 for w in self.weights):
            raise ConfigError("weights must be non-negative")
        total = sum(self.weights)
        if abs(total - 1.0) > 1e-9:
            raise ConfigError(f"weights must sum to 1 (got {total!r})")
        if self.weighting_mode not in WEIGHTING_MODES:
            raise ConfigError(f"weighting_mode must be one of {WEIGHTING_MODES}")
        if self.variant not in VARIANTS:
            raise ConfigError(f"variant must be one of {VARIANTS}")
        if self.variant in ("triplet", "goodrich"):
            for i, w in enumerate(self.weights):
                if i not in _TRIPLET_ROLES and w != 0.0:
                    raise ConfigError(
                        f"variant {self.variant!r} requires zero weight for "
                        f"{ROLE_NAMES[i]!r}, got {w}")
        if self.coref_cap < 1:
            raise ConfigError("coref_cap must be a positive integer")

    def to_dict(self) -> dict:
        return {
            "weights": list(self.weights),
            "weighting": self.weighting_mode,
            "similarity": self.similarity.kind,
            "variant": self.variant,
            "coref": self.coref,
            "coref_cap": self.coref_cap,
        }


@dataclass(frozen=True)
class TupleScore:
    """Best match for one summary tuple, with a per-role similarity breakdown."""

    summary_tuple: FactTuple
    best_source: FactTuple | None
    best_index: int | None
    score: float
    role_similarities: tuple[float | None, ...]

    def to_dict(self) -> dict:
        return {
            "summary_tuple": list(self.summary_tuple.texts()),
            "best_source_tuple": (list(self.best_source.texts())
                                  if self.best_source is not None else None),
            "best_source_index": self.best_index,
            "score": self.score,
            "role_similarities": dict(zip(ROLE_NAMES, self.role_similarities)),
        }


@dataclass(frozen=True)
class ScoreReport:
    """Overall score plus per-tuple evidence; overall is the mean tuple score."""

    overall: float
    tuple_scores: tuple[TupleScore, ...]
    summary_empty: bool = False
    source_empty: bool = False
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "overall": self.overall,
            "summary_empty": self.summary_empty,
            "source_empty": self.source_empty,
            "tuples": [t.to_dict() for t in self.tuple_scores],
        }
        out.update(self.extra)
        return out


def score_tuple_pair(f_s: FactTuple, f_r: FactTuple, cfg: ScoringConfig) -> float:
    """Support of summary tuple f_s given source tuple f_r.

    Static: sum over present summary roles of sim * weight (a role absent
    from f_r scores 0). Dynamic: the same sum divided by the total weight
    of the present roles; if that total is zero (all present roles carry
    zero weight) the score is 0.0.
    """
    weights = cfg.weights
    num = 0.0
    for i in range(7):
        r_s = f_s.role(i)
        if r_s is None:
            continue
        r_r = f_r.role(i)
        sim = cfg.similarity(r_s.text, r_r.text) if r_r is not None else 0.0
        num += sim * weights[i]
    if cfg.weighting_mode == "static":
        return num
    den = 0.0
    for i in range(7):
        if f_s.role(i) is not None:
            den += weights[i]
    return num / den if den > 0.0 else 0.0


def _role_breakdown(f_s: FactTuple, f_r: FactTuple | None,
                    cfg: ScoringConfig) -> tuple[float | None, ...]:
    out: list[float | None] = []
    for i in range(7):
        r_s = f_s.role(i)
        if r_s is None or f_r is None:
            out.append(None)
            continue
        r_r = f_r.role(i)
        out.append(cfg.similarity(r_s.text, r_r.text) if r_r is not None else 0.0)
    return tuple(out)


def _best_match(f_s: FactTuple, source: FactDatabase,
                cfg: ScoringConfig) -> TupleScore:
    best_score = 0.0
    best_idx: int | None = None
    for idx, f_r in enumerate(source.tuples):
        s = score_tuple_pair(f_s, f_r, cfg)
        if best_idx is None or s > best_score:
            best_score, best_idx = s, idx
    best = source.tuples[best_idx] if best_idx is not None else None
    return TupleScore(
        summary_tuple=f_s,
        best_source=best,
        best_index=best_idx,
        score=best_score if best_idx is not None else 0.0,
        role_similarities=_role_breakdown(f_s, best, cfg),
    )


def score_summary(source: FactDatabase, summary: FactDatabase,
                  cfg: ScoringConfig, jobs: int = 1) -> ScoreReport:
    """Mean over summary tuples of the best pair score against all source tuples.

    An empty summary database yields 0.0 with the degenerate-case flag set;
    an empty source database yields 0.0 for every summary tuple. Ties keep
    the first source tuple in database order, so results are deterministic
    and independent of `jobs`.
    """
    if not summary.tuples:
        return ScoreReport(overall=0.0, tuple_scores=(),
                           summary_empty=True, source_empty=not source.tuples)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            scored = list(pool.map(lambda t: _best_match(t, source, cfg), summary.tuples))
    else:
        scored = [_best_match(t, source, cfg) for t in summary.tuples]
    overall = sum(ts.score for ts in scored) / len(scored)
    return ScoreReport(overall=overall, tuple_scores=tuple(scored),
                       source_empty=not source.tuples)


def _optional_sim(a, b, cfg: ScoringConfig) -> float:
    """Similarity over optional role values: both absent match exactly."""
    if a is None and b is None:
        return 1.0
    if a is None or b is None:
        return 0.0
    return cfg.similarity(a.text, b.text)


def score_goodrich(source: FactDatabase, summary: FactDatabase,
                   cfg: ScoringConfig, jobs: int = 1) -> ScoreReport:
    """Filtered scoring over triplets: restrict the source database to
    tuples whose agent and relation exactly match, then take the best
    patient similarity. An empty filtered subset scores 0.0.
    """

    def agent_relation_match(f_s: FactTuple, f_r: FactTuple) -> bool:
        if (f_s.agent is None) != (f_r.agent is None):
            return False
        if f_s.agent is not None and f_s.agent.text != f_r.agent.text:
            return False
        return f_s.relation.text == f_r.relation.text

    def score_one(f_s: FactTuple) -> TupleScore:
        best_score = 0.0
        best_idx: int | None = None
        for idx, f_r in enumerate(source.tuples):
            if not agent_relation_match(f_s, f_r):
                continue
            s = _optional_sim(f_s.patient, f_r.patient, cfg)
            if best_idx is None or s > best_score:
                best_score, best_idx = s, idx
        best = source.tuples[best_idx] if best_idx is not None else None
        sims: list[float | None] = [None] * 7
        if best is not None:
            if f_s.agent is not None:
                sims[AGENT] = 1.0
            sims[RELATION] = 1.0
            if f_s.patient is not None:
                sims[PATIENT] = _optional_sim(f_s.patient, best.patient, cfg)
        return TupleScore(summary_tuple=f_s, best_source=best, best_index=best_idx,
                          score=best_score if best_idx is not None else 0.0,
                          role_similarities=tuple(sims))

    if not summary.tuples:
        return ScoreReport(overall=0.0, tuple_scores=(),
                           summary_empty=True, source_empty=not source.tuples)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            scored = list(pool.map(score_one, summary.tuples))
    else:
        scored = [score_one(t) for t in summary.tuples]
    overall = sum(ts.score for ts in scored) / len(scored)
    return ScoreReport(overall=overall, tuple_scores=tuple(scored),
                       source_empty=not source.tuples)


def prepare_database(doc: AnnotatedDocument, cfg: ScoringConfig) -> FactDatabase:
    """Extract tuples and apply the configured reduction/expansion."""
    db = extract_tuples(doc)
    if cfg.variant in ("triplet", "goodrich"):
        db = reduce_database(db)
    if cfg.coref:
        db = expand_document(db, doc, cap=cfg.coref_cap)
    return db


def score_documents(source_doc: AnnotatedDocument, summary_doc: AnnotatedDocument,
                    cfg: ScoringConfig, jobs: int = 1) -> ScoreReport:
    """Extract, optionally reduce/expand, and score a document pair."""
    source = prepare_database(source_doc, cfg)
    summary = prepare_database(summary_doc, cfg)
    if cfg.variant == "goodrich":
        report = score_goodrich(source, summary, cfg, jobs=jobs)
    else:
        report = score_summary(source, summary, cfg, jobs=jobs)
    extra = dict(report.extra)
    extra.update({
        "source_tuple_count": len(source.tuples),
        "summary_tuple_count": len(summary.tuples),
    })
    return ScoreReport(overall=report.overall, tuple_scores=report.tuple_scores,
                       summary_empty=report.summary_empty,
                       source_empty=report.source_empty, extra=extra)
