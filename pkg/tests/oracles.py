"""Independent reference implementations used to freeze expected test values.

Everything here is written from first principles against the published
definitions (Jaro, Winkler prefix bonus, TF-IDF, soft token matching,
SplitMix64, partial Fisher-Yates, DCG) and deliberately shares no code
with the package under test.
"""

from __future__ import annotations

import math

MASK64 = (1 << 64) - 1


# --- seeded sampling ---------------------------------------------------------

def splitmix64_oracle(seed: int):
    """Yield the SplitMix64 stream for a 64-bit seed."""
    state = seed & MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def partial_fisher_yates_oracle(n: int, k: int, seed: int) -> list[int]:
    """First k entries of a Fisher-Yates shuffle of range(n), SplitMix64-driven."""
    rng = splitmix64_oracle(seed)
    items = list(range(n))
    for i in range(min(k, n)):
        j = i + next(rng) % (n - i)
        items[i], items[j] = items[j], items[i]
    return items[:k]


# --- string similarity -------------------------------------------------------

def jaro_oracle(a: str, b: str) -> float:
    """Jaro similarity, flag-array formulation."""
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    window = max(max(len(a), len(b)) // 2 - 1, 0)
    a_flags = [False] * len(a)
    b_flags = [False] * len(b)
    m = 0
    for i, ca in enumerate(a):
        lo = max(0, i - window)
        hi = min(len(b), i + window + 1)
        for j in range(lo, hi):
            if not b_flags[j] and b[j] == ca:
                a_flags[i] = True
                b_flags[j] = True
                m += 1
                break
    if m == 0:
        return 0.0
    a_matched = [ca for ca, f in zip(a, a_flags) if f]
    b_matched = [cb for cb, f in zip(b, b_flags) if f]
    half_transpositions = sum(x != y for x, y in zip(a_matched, b_matched))
    t = half_transpositions / 2.0
    return (m / len(a) + m / len(b) + (m - t) / m) / 3.0


def jaro_winkler_oracle(a: str, b: str) -> float:
    j = jaro_oracle(a, b)
    prefix = 0
    for ca, cb in zip(a, b):
        if ca != cb or prefix == 4:
            break
        prefix += 1
    return j + prefix * 0.1 * (1.0 - j)


# --- TF-IDF weights ----------------------------------------------------------

def tfidf_weights_oracle(doc: list[str], all_docs: list[list[str]]) -> dict[str, float]:
    """L2-normalized tf * ln(N/df) weights; zero vector when all raw weights are 0."""
    n = len(all_docs)
    df: dict[str, int] = {}
    for d in all_docs:
        for tok in dict.fromkeys(d):
            df[tok] = df.get(tok, 0) + 1
    tf: dict[str, float] = {}
    for tok in doc:
        tf[tok] = tf.get(tok, 0) + 1
    raw = {tok: tf[tok] * math.log(n / df[tok]) if tok in df else 0.0 for tok in tf}
    norm = math.sqrt(sum(w * w for w in raw.values()))
    if norm == 0.0:
        return {tok: 0.0 for tok in raw}
    return {tok: w / norm for tok, w in raw.items()}


# --- soft TF-IDF agreement ---------------------------------------------------

def soft_tfidf_oracle(wi: dict[str, float], wj: dict[str, float], theta: float) -> float:
    """Directional soft TF-IDF: sum over tokens of wi whose best Jaro-Winkler
    match in wj strictly exceeds theta, of V(w,vi) * V(u*,vj) * D(w,vj).
    Argmax ties resolve to the lexicographically smallest token of wj.
    """
    total = 0.0
    for w in sorted(wi):
        best_sim = -1.0
        best_u = None
        for u in sorted(wj):
            s = jaro_winkler_oracle(w, u)
            if s > best_sim:
                best_sim = s
                best_u = u
        if best_u is not None and best_sim > theta:
            total += wi[w] * wj[best_u] * best_sim
    return total


def agreement_matrix_oracle(docs: list[list[str]], theta: float) -> list[list[float]]:
    """Symmetric agreement weights for a candidate set of token lists."""
    vecs = [tfidf_weights_oracle(d, docs) for d in docs]
    n = len(docs)
    w = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m = (soft_tfidf_oracle(vecs[i], vecs[j], theta)
                 + soft_tfidf_oracle(vecs[j], vecs[i], theta)) / 2.0
            w[i][j] = m
            w[j][i] = m
    return w


def vertex_scores_oracle(weights: list[list[float]]) -> list[float]:
    return [sum(row) for row in weights]


# --- graded metrics ----------------------------------------------------------

def dcg_oracle(grades: list[float], k: int) -> float:
    return sum(g / math.log2(i + 2) for i, g in enumerate(grades[:k]))


def ndcg_oracle(grades: list[float], k: int) -> float:
    ideal = dcg_oracle(sorted(grades, reverse=True), k)
    if ideal == 0.0:
        return 0.0
    return dcg_oracle(grades, k) / ideal
