"""Candidate retrieval, agreement reranking, and the TF-IDF baseline.

Retrieval stands in for the platform's keyword+recency top-N: cosine
against the query over full-corpus stats, recency as tie-break. Reranking
is query-time: stats are rebuilt over the candidate set alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .agreement import AgreementGraph, AgreementParams, build_graph
from .corpus import Corpus, Tweet
from .text import TokenVector, build_stats, tokenize, vectorize

METHOD_AGREEMENT = "agreement"
METHOD_TFIDF = "tfidf"


@dataclass(frozen=True, slots=True)
class RankingConfig:
    top_n: int = 200
    top_k: int = 20
    params: AgreementParams = field(default_factory=AgreementParams)

    def __post_init__(self) -> None:
        if self.top_n < 1:
            raise ValueError("top_n must be positive")
        if self.top_k < 1:
            raise ValueError("top_k must be positive")
        if self.top_k > self.top_n:
            raise ValueError("top_k must not exceed top_n")


@dataclass(frozen=True, slots=True)
class RankedEntry:
    id: str
    score: float
    rank: int


@dataclass(frozen=True, slots=True)
class RankedList:
    entries: tuple[RankedEntry, ...]
    method: str

    def __post_init__(self) -> None:
        for pos, entry in enumerate(self.entries, start=1):
            if entry.rank != pos:
                raise ValueError("ranks must be contiguous from 1")
            if pos > 1 and entry.score > self.entries[pos - 2].score:
                raise ValueError("scores must be nonincreasing with rank")

    def to_json(self) -> str:
        """Serialize as a JSON array with scores at 6 decimal places."""
        lines = [
            f'  {{"id": {json.dumps(e.id, ensure_ascii=False)}, "rank": {e.rank},'
            f' "score": {e.score:.6f}, "method": "{self.method}"}}'
            for e in self.entries
        ]
        if not lines:
            return "[]\n"
        return "[\n" + ",\n".join(lines) + "\n]\n"


def _cosine(a: dict[str, float], b: dict[str, float]) -> float:
    if len(b) < len(a):
        a, b = b, a
    return sum(w * b[tok] for tok, w in a.items() if tok in b)


def _order_scored(scored: list[tuple[Tweet, float]]) -> list[tuple[Tweet, float]]:
    # total order: score desc, then recency desc, then id asc
    return sorted(scored, key=lambda pair: (-pair[1], -pair[0].timestamp, pair[0].id))


def _to_ranked(scored: list[tuple[Tweet, float]], top_k: int, method: str) -> RankedList:
    entries = tuple(
        RankedEntry(id=tweet.id, score=score, rank=pos)
        for pos, (tweet, score) in enumerate(_order_scored(scored)[:top_k], start=1)
    )
    return RankedList(entries=entries, method=method)


def retrieve_candidates(corpus: Corpus, query: str, top_n: int) -> list[Tweet]:
    """Top-N by cosine between full-corpus TF-IDF vectors and the query
    vector; ties broken by recency, then id."""
    if top_n < 1:
        raise ValueError("top_n must be positive")
    query_tokens = tokenize(query)
    if not query_tokens:
        raise ValueError("query contains no usable terms")
    if not corpus.tweets:
        return []
    docs = [tokenize(t.text) for t in corpus.tweets]
    stats = build_stats(docs)
    query_vec = vectorize(query_tokens, stats)
    scored = [
        (tweet, _cosine(vectorize(tokens, stats, source_id=tweet.id).weights, query_vec.weights))
        for tweet, tokens in zip(corpus.tweets, docs)
    ]
    return [tweet for tweet, _ in _order_scored(scored)[:top_n]]


def candidate_vectors(candidates: list[Tweet]) -> list[TokenVector]:
    """Vectorize candidates over stats rebuilt from the candidate set alone."""
    docs = [tokenize(t.text) for t in candidates]
    stats = build_stats(docs)
    return [
        vectorize(tokens, stats, source_id=t.id) for t, tokens in zip(candidates, docs)
    ]


def candidate_graph(
    candidates: list[Tweet],
    params: AgreementParams,
    *,
    workers: int | None = None,
    backend: str | None = None,
) -> AgreementGraph:
    """Agreement graph over a candidate set (query-time stats)."""
    if not candidates:
        raise ValueError("candidate list is empty")
    return build_graph(candidate_vectors(candidates), params, workers=workers, backend=backend)


def rank_graph(graph: AgreementGraph, candidates: list[Tweet], top_k: int) -> RankedList:
    """Rank candidates by vertex voting score on an existing graph."""
    scores = graph.vertex_scores()
    scored = [(tweet, float(scores[i])) for i, tweet in enumerate(candidates)]
    return _to_ranked(scored, top_k, METHOD_AGREEMENT)


def rank_by_agreement(
    candidates: list[Tweet],
    cfg: RankingConfig,
    *,
    workers: int | None = None,
    backend: str | None = None,
) -> RankedList:
    """Score each candidate by the sum of its agreement-edge weights."""
    graph = candidate_graph(candidates, cfg.params, workers=workers, backend=backend)
    return rank_graph(graph, candidates, cfg.top_k)


def rank_by_tfidf(candidates: list[Tweet], query: str, top_k: int) -> RankedList:
    """Baseline: cosine between candidate vectors and the query vector over
    candidate-set stats."""
    if not candidates:
        raise ValueError("candidate list is empty")
    query_tokens = tokenize(query)
    if not query_tokens:
        raise ValueError("query contains no usable terms")
    docs = [tokenize(t.text) for t in candidates]
    stats = build_stats(docs)
    query_vec = vectorize(query_tokens, stats)
    scored = [
        (tweet, _cosine(vectorize(tokens, stats, source_id=tweet.id).weights, query_vec.weights))
        for tweet, tokens in zip(candidates, docs)
    ]
    return _to_ranked(scored, top_k, METHOD_TFIDF)
