"""Independent brute-force oracles the scorer is checked against.

Everything here is written directly from the scoring definitions, with no
imports from srlscore's scoring or similarity internals: plain double
loops, no pruning, no shared helpers. Arithmetic follows the formulas in a
fixed order (role-order summation, single division for re-normalization),
which is part of the bit-identical equivalence contract.
"""

from __future__ import annotations

import math

import numpy as np

Texts = tuple  # 7-tuple of str | None in role order


def load_vector_table(path) -> dict[str, np.ndarray]:
    table = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            parts = line.split()
            if parts:
                table[parts[0]] = np.array([float(v) for v in parts[1:]], dtype=np.float64)
    return table


def oracle_sim_exact(a: str, b: str) -> float:
    return 1.0 if a == b else 0.0


def oracle_sim_rouge1_precision(candidate: str, reference: str) -> float:
    cand = candidate.split()
    if not cand:
        return 0.0
    ref = reference.split()
    matched = 0
    for tok in sorted(set(cand)):
        matched += min(cand.count(tok), ref.count(tok))
    return matched / len(cand)


def oracle_sim_vector(a: str, b: str, table: dict[str, np.ndarray], dim: int) -> float:
    if a == b:
        return 1.0 if any(t in table for t in a.split()) else 0.0

    def mean(text: str) -> np.ndarray:
        tokens = text.split()
        acc = np.zeros(dim, dtype=np.float64)
        if not tokens:
            return acc
        for t in tokens:
            if t in table:
                acc += table[t]
        return acc / len(tokens)

    va, vb = mean(a), mean(b)
    na = math.sqrt(float(va.dot(va)))
    nb = math.sqrt(float(vb.dot(vb)))
    if na == 0.0 or nb == 0.0:
        return 0.0
    cos = float(va.dot(vb)) / (na * nb)
    return min(max(cos, 0.0), 1.0)


def oracle_pair_score(f_s: Texts, f_r: Texts, weights, dynamic: bool, sim) -> float:
    total = 0.0
    for i in range(7):
        if f_s[i] is None:
            continue
        s = sim(f_s[i], f_r[i]) if f_r[i] is not None else 0.0
        total += s * weights[i]
    if not dynamic:
        return total
    den = 0.0
    for i in range(7):
        if f_s[i] is not None:
            den += weights[i]
    return total / den if den > 0.0 else 0.0


def oracle_overall(source: list[Texts], summary: list[Texts],
                   weights, dynamic: bool, sim) -> float:
    if not summary:
        return 0.0
    scores = []
    for f_s in summary:
        best = 0.0
        if source:
            best = max(oracle_pair_score(f_s, f_r, weights, dynamic, sim)
                       for f_r in source)
        scores.append(best)
    return sum(scores) / len(scores)


def oracle_pearson(x, y) -> float:
    """Closed-form sample correlation via plain Python sums."""
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    cov = sum((a - mx) * (b - my) for a, b in zip(x, y))
    vx = sum((a - mx) ** 2 for a in x)
    vy = sum((b - my) ** 2 for b in y)
    return cov / math.sqrt(vx * vy)


def oracle_average_ranks(values) -> list[float]:
    """Average (fractional) ranks, 1-based, hand-rolled."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def oracle_exhaustive_permutation_p(a, b, human, corr) -> float:
    """Enumerate all 2^n swap patterns; p = #(delta >= observed) / 2^n."""
    n = len(a)
    observed = abs(corr(a, human) - corr(b, human))
    count = 0
    for pattern in range(2 ** n):
        pa, pb = [], []
        for i in range(n):
            if (pattern >> i) & 1:
                pa.append(b[i])
                pb.append(a[i])
            else:
                pa.append(a[i])
                pb.append(b[i])
        if abs(corr(pa, human) - corr(pb, human)) >= observed:
            count += 1
    return count / 2 ** n
