"""Soft TF-IDF pairwise agreement and the candidate agreement graph.

Directional agreement between documents i and j sums, over tokens w of i
whose best Jaro-Winkler match u* in j strictly exceeds theta, the product
V(w,i) * V(u*,j) * max_sim. Edge weights symmetrize the two directions by
arithmetic mean; a candidate's voting score is the sum of its incident
edge weights.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import get_backend
from .strsim import jaro_winkler
from .text import TokenVector


@dataclass(frozen=True, slots=True)
class AgreementParams:
    theta: float = 0.6

    def __post_init__(self) -> None:
        if not 0.0 < self.theta < 1.0:
            raise ValueError(f"theta must lie in (0, 1), got {self.theta}")


class AgreementGraph:
    """Symmetric weighted graph over candidates, dense storage, no self-edges."""

    __slots__ = ("ids", "_weights")

    def __init__(self, ids: tuple[str, ...], weights: np.ndarray) -> None:
        if weights.shape != (len(ids), len(ids)):
            raise ValueError("weight matrix shape must match the id count")
        self.ids = tuple(ids)
        self._weights = weights

    @property
    def n(self) -> int:
        return len(self.ids)

    def weight(self, i: int, j: int) -> float:
        self._check_index(i)
        self._check_index(j)
        if i == j:
            return 0.0
        return float(self._weights[i, j])

    def vertex_score(self, i: int) -> float:
        self._check_index(i)
        return float(self._weights[i].sum())

    def vertex_scores(self) -> np.ndarray:
        return self._weights.sum(axis=1)

    def edges(self):
        """Yield (i, j, weight) for i < j where weight > 0, in (i, j) order."""
        for i in range(self.n):
            row = self._weights[i]
            for j in range(i + 1, self.n):
                if row[j] > 0.0:
                    yield i, j, float(row[j])

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"vertex index {i} out of range for n={self.n}")


def soft_tfidf(vi: TokenVector, vj: TokenVector, theta: float) -> float:
    """Directional soft TF-IDF agreement (scalar reference form).

    Argmax ties resolve to the lexicographically smallest token of vj. Zero
    vectors contribute zero weights, so the result is 0 for them.
    """
    if not vi.weights or not vj.weights:
        return 0.0
    targets = sorted(vj.weights)
    total = 0.0
    for w in sorted(vi.weights):
        best = -1.0
        best_u = targets[0]
        for u in targets:
            s = jaro_winkler(w, u)
            if s > best:
                best = s
                best_u = u
        if best > theta:
            total += vi.weights[w] * vj.weights[best_u] * best
    return total


def agreement_weight(vi: TokenVector, vj: TokenVector, theta: float) -> float:
    """Undirected edge weight: mean of the two directional agreements."""
    return (soft_tfidf(vi, vj, theta) + soft_tfidf(vj, vi, theta)) / 2.0


def build_graph(
    vectors: list[TokenVector],
    params: AgreementParams,
    *,
    workers: int | None = None,
    backend: str | None = None,
) -> AgreementGraph:
    """All-pairs agreement graph via the selected kernel backend.

    Pairwise weights are independent, so the kernel may fan the (i, j) set
    out across `workers` threads; the result is identical either way.
    """
    ids = tuple(v.source_id for v in vectors)
    vocab = sorted({tok for v in vectors for tok in v.weights})
    index = {tok: i for i, tok in enumerate(vocab)}
    doc_tokens: list[np.ndarray] = []
    doc_weights: list[np.ndarray] = []
    for v in vectors:
        pairs = sorted((index[tok], w) for tok, w in v.weights.items())
        doc_tokens.append(np.array([p[0] for p in pairs], dtype=np.int32))
        doc_weights.append(np.array([p[1] for p in pairs], dtype=np.float64))
    kernels = get_backend(backend)
    weights = kernels.agreement_matrix(vocab, doc_tokens, doc_weights, params.theta, workers)
    return AgreementGraph(ids, weights)


def vertex_score(graph: AgreementGraph, i: int) -> float:
    """Voting score of vertex i: the sum of its incident edge weights."""
    return graph.vertex_score(i)


def write_graph_csv(graph: AgreementGraph, fh) -> None:
    """Dump positive edges as `id_i,id_j,weight` rows sorted by (i, j)."""
    fh.write("id_i,id_j,weight\n")
    for i, j, w in graph.edges():
        fh.write(f"{graph.ids[i]},{graph.ids[j]},{w:.6f}\n")
