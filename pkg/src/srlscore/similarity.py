"""Pairwise argument-similarity functions: exact, unigram precision, vector cosine.

All functions assume their inputs are already normalized (lowercased,
whitespace-collapsed) and return scores in [0, 1]. Unigram precision is
directional: the candidate is always the summary-side argument. Exact and
vector cosine are symmetric.
"""

from __future__ import annotations

import math
from collections import Counter
from pathlib import Path

import numpy as np

from .errors import ConfigError

KINDS = ("exact", "unigram_precision", "vector_cosine")


class EmbeddingTable:
    """Token -> dense vector map, loaded once, immutable and shareable.

    File format: one token per line, the token followed by d
    whitespace-separated decimal floats.
    """

    def __init__(self, vectors: dict[str, np.ndarray], dimension: int):
        if dimension <= 0:
            raise ConfigError("embedding dimension must be positive")
        self.vectors = vectors
        self.dimension = dimension

    @classmethod
    def load(cls, path: str | Path) -> "EmbeddingTable":
        vectors: dict[str, np.ndarray] = {}
        dimension: int | None = None
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                parts = line.split()
                if not parts:
                    continue
                token, values = parts[0], parts[1:]
                if dimension is None:
                    dimension = len(values)
                    if dimension == 0:
                        raise ConfigError(f"{path}: line {lineno}: no vector components")
                elif len(values) != dimension:
                    raise ConfigError(
                        f"{path}: line {lineno}: expected {dimension} components, "
                        f"got {len(values)}")
                try:
                    vectors[token] = np.array([float(v) for v in values], dtype=np.float64)
                except ValueError as e:
                    raise ConfigError(f"{path}: line {lineno}: {e}") from e
        if dimension is None:
            raise ConfigError(f"{path}: empty embedding file")
        return cls(vectors, dimension)

    def mean_vector(self, text: str) -> np.ndarray:
        """Mean token vector; OOV tokens contribute zero vectors but count."""
        tokens = text.split()
        acc = np.zeros(self.dimension, dtype=np.float64)
        if not tokens:
            return acc
        for t in tokens:
            vec = self.vectors.get(t)
            if vec is not None:
                acc += vec
        return acc / len(tokens)

    def has_any(self, text: str) -> bool:
        return any(t in self.vectors for t in text.split())


def sim_exact(a: str, b: str) -> float:
    return 1.0 if a == b else 0.0


def sim_unigram_precision(candidate: str, reference: str) -> float:
    """Clipped unigram matches / candidate token count. Directional."""
    cand = candidate.split()
    if not cand:
        return 0.0
    cand_counts = Counter(cand)
    ref_counts = Counter(reference.split())
    matched = sum(min(n, ref_counts[tok]) for tok, n in cand_counts.items())
    return matched / len(cand)


def sim_vector(a: str, b: str, table: EmbeddingTable) -> float:
    """Cosine of mean token vectors, clamped to [0, 1].

    Identical strings with at least one in-vocabulary token score exactly
    1.0; an all-zero mean on either side scores 0.0.
    """
    if a == b:
        return 1.0 if table.has_any(a) else 0.0
    va, vb = table.mean_vector(a), table.mean_vector(b)
    na = math.sqrt(float(va.dot(va)))
    nb = math.sqrt(float(vb.dot(vb)))
    if na == 0.0 or nb == 0.0:
        return 0.0
    cos = float(va.dot(vb)) / (na * nb)
    return min(max(cos, 0.0), 1.0)


class SimilarityFunction:
    """A configured similarity: kind plus, for vector_cosine, the table.

    Callable as sim(summary_text, source_text). A missing embedding table is
    a configuration error at construction time, never at call time.
    """

    def __init__(self, kind: str, table: EmbeddingTable | None = None):
        if kind not in KINDS:
            raise ConfigError(f"unknown similarity kind {kind!r}; expected one of {KINDS}")
        if kind == "vector_cosine" and table is None:
            raise ConfigError("vector_cosine similarity requires an embedding table")
        self.kind = kind
        self.table = table

    def __call__(self, summary_text: str, source_text: str) -> float:
        if self.kind == "exact":
            return sim_exact(summary_text, source_text)
        if self.kind == "unigram_precision":
            return sim_unigram_precision(summary_text, source_text)
        return sim_vector(summary_text, source_text, self.table)

    def __repr__(self) -> str:
        return f"SimilarityFunction(kind={self.kind!r})"


def make_similarity(kind: str, embeddings_path: str | Path | None = None) -> SimilarityFunction:
    table = None
    if kind == "vector_cosine":
        if embeddings_path is None:
            raise ConfigError("vector_cosine similarity requires --embeddings PATH")
        table = EmbeddingTable.load(embeddings_path)
    return SimilarityFunction(kind, table)
