"""Graded metrics (mean relevance, NDCG, mean trust), the timing benchmark,
and a seeded synthetic corpus generator for desk-scale evaluation."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .corpus import Corpus, JudgmentSet, Tweet
from .ranking import RankedList, RankingConfig, rank_by_agreement, retrieve_candidates
from .rng import SplitMix64


class MissingJudgmentError(ValueError):
    """A ranked id has no judgment; silent skips would corrupt curves."""

    def __init__(self, tweet_id: str) -> None:
        super().__init__(f"no judgment for ranked id {tweet_id!r}")
        self.tweet_id = tweet_id


@dataclass(frozen=True, slots=True)
class MetricCurve:
    points: tuple[tuple[int, float], ...]
    metric: str
    method: str

    def __post_init__(self) -> None:
        ks = [k for k, _ in self.points]
        if any(b <= a for a, b in zip(ks, ks[1:])):
            raise ValueError("k values must be strictly increasing")


@dataclass(frozen=True, slots=True)
class TimingRecord:
    n_tweets: int
    elapsed: float

    def __post_init__(self) -> None:
        if self.elapsed < 0:
            raise ValueError("elapsed must be nonnegative")


def _grades(ranked: RankedList, judgments: JudgmentSet) -> list[float]:
    grades = []
    for entry in ranked.entries:
        if entry.id not in judgments.relevance:
            raise MissingJudgmentError(entry.id)
        grades.append(judgments.relevance_value(entry.id))
    return grades


def _check_k(ranked: RankedList, k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    if not ranked.entries:
        raise ValueError("ranked list is empty")
    return min(k, len(ranked.entries))


def mean_relevance_at_k(ranked: RankedList, judgments: JudgmentSet, k: int) -> float:
    """Arithmetic mean of graded relevance over the top min(k, len) entries."""
    kk = _check_k(ranked, k)
    vals = []
    for entry in ranked.entries[:kk]:
        if entry.id not in judgments.relevance:
            raise MissingJudgmentError(entry.id)
        vals.append(judgments.relevance_value(entry.id))
    return sum(vals) / len(vals)


def _dcg(grades: list[float], k: int) -> float:
    return sum(g / math.log2(i + 2) for i, g in enumerate(grades[:k]))


def ndcg_at_k(ranked: RankedList, judgments: JudgmentSet, k: int) -> float:
    """Linear-gain NDCG with log2(i+1) discounts.

    The ideal ordering sorts the whole list's grades descending, so every
    ranked id must be judged. Defined as 0 when the ideal gain is 0.
    """
    kk = _check_k(ranked, k)
    grades = _grades(ranked, judgments)
    ideal = _dcg(sorted(grades, reverse=True), kk)
    if ideal == 0.0:
        return 0.0
    return _dcg(grades, kk) / ideal


def mean_trust_at_k(ranked: RankedList, judgments: JudgmentSet, k: int) -> float:
    """Arithmetic mean of trust grades over the top min(k, len) entries."""
    kk = _check_k(ranked, k)
    vals = []
    for entry in ranked.entries[:kk]:
        if entry.id not in judgments.trust:
            raise MissingJudgmentError(entry.id)
        vals.append(judgments.trust[entry.id])
    return sum(vals) / len(vals)


def bench_timing(
    corpus: Corpus,
    query: str,
    sizes: list[int],
    cfg: RankingConfig,
    *,
    workers: int | None = None,
    backend: str | None = None,
) -> list[TimingRecord]:
    """Wall-clock timing of agreement ranking over growing candidate prefixes.

    Candidates are retrieved once for the largest size; each measured run
    ranks the first n of them. A small untimed warmup run precedes the
    measurements so one-time JIT compilation does not pollute the first
    record.
    """
    for size in sizes:
        if size < 1:
            raise ValueError("sizes must be positive")
        if size > len(corpus.tweets):
            raise ValueError(f"size {size} exceeds corpus of {len(corpus.tweets)} tweets")
    if not sizes:
        return []
    candidates = retrieve_candidates(corpus, query, max(sizes))
    warm_cfg = RankingConfig(top_n=cfg.top_n, top_k=1, params=cfg.params)
    rank_by_agreement(candidates[: min(16, len(candidates))], warm_cfg,
                      workers=workers, backend=backend)
    records = []
    for size in sizes:
        start = time.perf_counter()
        rank_by_agreement(candidates[:size], cfg, workers=workers, backend=backend)
        records.append(TimingRecord(n_tweets=size, elapsed=time.perf_counter() - start))
    return records


def timing_csv(records: list[TimingRecord]) -> str:
    lines = ["n,seconds"]
    lines += [f"{r.n_tweets},{r.elapsed:.6f}" for r in records]
    return "\n".join(lines) + "\n"


# --- synthetic corpus --------------------------------------------------------
#
# One paraphrase cluster per requested size: tweets share a core token set
# with seeded drops, fillers, and occasional character-level typos (kept
# Jaro-Winkler-similar to the source token). Spam tweets stuff the anchor
# keywords (so a query-similarity baseline sees them) padded with throwaway
# junk tokens that agree with nothing.

ANCHOR_TOKENS = ("britney", "spears")

_CORE_POOL = (
    "engaged", "marry", "jason", "trawick", "ring", "couple", "announce",
    "wedding", "boyfriend", "agent", "longtime", "confirm", "official",
    "star", "singer", "news", "report", "source", "today", "exclusive",
    "celebrity", "romance", "update", "finally",
)
_FILLER_POOL = ("says", "just", "wow", "big", "happy", "love", "omg", "breaking")
_CORE_WORDS_PER_CLUSTER = 9
_ANCHOR_PROB = 0.3
_CORE_KEEP_PROB = 0.88
_FILLERS_PER_TWEET = 2
_TYPO_PROB = 0.15
_BASE_TIMESTAMP = 1_325_400_000
_TIMESTAMP_STEP = 53


def _typo(token: str, rng: SplitMix64) -> str:
    if len(token) < 4:
        return token
    op = rng.below(3)
    pos = 1 + rng.below(len(token) - 2)  # pos in [1, len-2]
    if op == 0:  # swap adjacent characters
        chars = list(token)
        chars[pos], chars[pos + 1] = chars[pos + 1], chars[pos]
        return "".join(chars)
    if op == 1:  # drop a character
        return token[:pos] + token[pos + 1 :]
    return token[:pos] + token[pos] + token[pos:]  # double a character


def _cluster_tokens(cluster: int, rng: SplitMix64) -> list[str]:
    core = [
        _CORE_POOL[(cluster * _CORE_WORDS_PER_CLUSTER + i) % len(_CORE_POOL)]
        for i in range(_CORE_WORDS_PER_CLUSTER)
    ]
    tokens = [a for a in ANCHOR_TOKENS if rng.frac() < _ANCHOR_PROB]
    tokens += [w for w in core if rng.frac() < _CORE_KEEP_PROB]
    tokens += [_FILLER_POOL[rng.below(len(_FILLER_POOL))] for _ in range(_FILLERS_PER_TWEET)]
    if not tokens:
        tokens = [core[0]]
    if rng.frac() < _TYPO_PROB:
        idx = rng.below(len(tokens))
        tokens[idx] = _typo(tokens[idx], rng)
    return tokens


def _spam_tokens(rng: SplitMix64) -> list[str]:
    repeats = 2 + rng.below(2)
    tokens = list(ANCHOR_TOKENS) * repeats
    for _ in range(1 + rng.below(2)):
        length = 5 + rng.below(4)
        tokens.append("".join(chr(ord("a") + rng.below(26)) for _ in range(length)))
    return tokens


def gen_synthetic(
    seed: int, cluster_sizes: list[int], spam_count: int
) -> tuple[Corpus, JudgmentSet]:
    """Deterministic corpus of trustworthy paraphrase clusters plus spam.

    Cluster tweets are judged relevance 2 or 3 thirds with trust 1; spam is
    relevance 0, trust -1. The same seed always yields identical output.
    """
    if not cluster_sizes:
        raise ValueError("cluster_sizes must be nonempty")
    if spam_count < 0:
        raise ValueError("spam_count must be nonnegative")
    rng = SplitMix64(seed)
    tweets: list[Tweet] = []
    relevance: dict[str, int] = {}
    trust: dict[str, int] = {}

    def emit(tokens: list[str], thirds: int, grade: int) -> None:
        idx = len(tweets)
        tid = f"t{idx:04d}"
        tweets.append(
            Tweet(
                id=tid,
                text=" ".join(tokens),
                author=f"user{rng.below(64):02d}",
                timestamp=_BASE_TIMESTAMP + idx * _TIMESTAMP_STEP,
            )
        )
        relevance[tid] = thirds
        trust[tid] = grade

    for cluster, size in enumerate(cluster_sizes):
        for _ in range(size):
            emit(_cluster_tokens(cluster, rng), 2 + rng.below(2), 1)
    for _ in range(spam_count):
        emit(_spam_tokens(rng), 0, -1)
    return Corpus(tuple(tweets)), JudgmentSet(relevance=relevance, trust=trust)
