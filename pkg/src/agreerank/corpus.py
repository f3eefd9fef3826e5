"""Corpus model: JSONL ingestion, retweet filtering, seeded sampling, judgments."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .rng import MASK64, SplitMix64


class CorpusError(ValueError):
    """Malformed corpus file or corpus invariant violation."""


class JudgmentError(ValueError):
    """Malformed judgment file or grade out of range."""


@dataclass(frozen=True, slots=True)
class Tweet:
    id: str
    text: str
    author: str
    timestamp: int
    is_retweet: bool = False
    urls: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.id:
            raise CorpusError("tweet id must be nonempty")
        if self.timestamp < 0:
            raise CorpusError(f"tweet {self.id!r}: timestamp must be >= 0")


@dataclass(frozen=True, slots=True)
class Corpus:
    tweets: tuple[Tweet, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for t in self.tweets:
            if t.id in seen:
                raise CorpusError(f"duplicate tweet id {t.id!r}")
            seen.add(t.id)

    def __len__(self) -> int:
        return len(self.tweets)

    def __iter__(self):
        return iter(self.tweets)


@dataclass(frozen=True, slots=True)
class SamplerConfig:
    seed: int
    sample_size: int = 200
    pool_cap: int = 1500

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.sample_size < 1:
            raise ValueError("sample_size must be positive")
        if self.pool_cap < 1:
            raise ValueError("pool_cap must be positive")
        if self.sample_size > self.pool_cap:
            raise ValueError("sample_size must not exceed pool_cap")


@dataclass(frozen=True, slots=True)
class JudgmentSet:
    """Graded labels: relevance in integer thirds 0..3, trust in -1..1."""

    relevance: dict[str, int] = field(default_factory=dict)
    trust: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for tid, thirds in self.relevance.items():
            if thirds not in (0, 1, 2, 3):
                raise JudgmentError(f"id {tid!r}: relevance thirds {thirds} outside 0..3")
        for tid, grade in self.trust.items():
            if grade not in (-1, 0, 1):
                raise JudgmentError(f"id {tid!r}: trust {grade} outside -1..1")

    def relevance_value(self, tweet_id: str) -> float:
        """Relevance grade as a fraction: thirds / 3."""
        return self.relevance[tweet_id] / 3.0


_REQUIRED_KEYS = ("id", "text", "author", "timestamp")


def load_corpus(path: str) -> Corpus:
    """Read a JSONL corpus file.

    One JSON object per nonempty line; `retweet` defaults to false and
    `urls` to empty. Errors carry the offending line number.
    """
    tweets: list[Tweet] = []
    first_line: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}: line {lineno}: invalid JSON: {exc.msg}") from exc
            if not isinstance(obj, dict):
                raise CorpusError(f"{path}: line {lineno}: expected a JSON object")
            for key in _REQUIRED_KEYS:
                if key not in obj:
                    raise CorpusError(f"{path}: line {lineno}: missing required field {key!r}")
            tid = obj["id"]
            if not isinstance(tid, str) or not tid:
                raise CorpusError(f"{path}: line {lineno}: id must be a nonempty string")
            if tid in first_line:
                raise CorpusError(
                    f"{path}: line {lineno}: duplicate id {tid!r}"
                    f" (first seen on line {first_line[tid]})"
                )
            first_line[tid] = lineno
            if not isinstance(obj["text"], str) or not isinstance(obj["author"], str):
                raise CorpusError(f"{path}: line {lineno}: text and author must be strings")
            ts = obj["timestamp"]
            if isinstance(ts, bool) or not isinstance(ts, int) or ts < 0:
                raise CorpusError(f"{path}: line {lineno}: timestamp must be a nonnegative integer")
            retweet = obj.get("retweet", False)
            if not isinstance(retweet, bool):
                raise CorpusError(f"{path}: line {lineno}: retweet must be a boolean")
            urls = obj.get("urls", [])
            if not isinstance(urls, list) or any(not isinstance(u, str) for u in urls):
                raise CorpusError(f"{path}: line {lineno}: urls must be an array of strings")
            tweets.append(
                Tweet(
                    id=tid,
                    text=obj["text"],
                    author=obj["author"],
                    timestamp=ts,
                    is_retweet=retweet,
                    urls=tuple(urls),
                )
            )
    return Corpus(tuple(tweets))


def write_corpus(corpus: Corpus, path: str) -> None:
    """Write a corpus in the canonical JSONL form (all keys, file order)."""
    with open(path, "w", encoding="utf-8") as fh:
        for t in corpus.tweets:
            record = {
                "id": t.id,
                "text": t.text,
                "author": t.author,
                "timestamp": t.timestamp,
                "retweet": t.is_retweet,
                "urls": list(t.urls),
            }
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")


def filter_retweets(corpus: Corpus) -> Corpus:
    return Corpus(tuple(t for t in corpus.tweets if not t.is_retweet))


def sample_candidates(corpus: Corpus, cfg: SamplerConfig) -> list[Tweet]:
    """Sample without replacement from the first `pool_cap` tweets.

    Partial Fisher-Yates driven by SplitMix64(seed); the selected prefix is
    returned in selection order, so equal inputs give identical output on
    any platform. An undersized pool is returned whole, in order.
    """
    pool = list(corpus.tweets[: cfg.pool_cap])
    if cfg.sample_size >= len(pool):
        return pool
    rng = SplitMix64(cfg.seed)
    for i in range(cfg.sample_size):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[: cfg.sample_size]


def load_judgments(path: str) -> JudgmentSet:
    """Read a `id<TAB>relevance_thirds<TAB>trust` TSV.

    `#`-prefixed and blank lines are skipped; a later row for an id
    overwrites an earlier one.
    """
    relevance: dict[str, int] = {}
    trust: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise JudgmentError(
                    f"{path}: line {lineno}: expected id<TAB>relevance<TAB>trust"
                )
            tid, rel_text, trust_text = parts
            if not tid:
                raise JudgmentError(f"{path}: line {lineno}: empty id")
            try:
                thirds = int(rel_text)
                grade = int(trust_text)
            except ValueError as exc:
                raise JudgmentError(f"{path}: line {lineno}: grades must be integers") from exc
            if thirds not in (0, 1, 2, 3):
                raise JudgmentError(
                    f"{path}: line {lineno}: relevance thirds {thirds} outside 0..3"
                )
            if grade not in (-1, 0, 1):
                raise JudgmentError(f"{path}: line {lineno}: trust {grade} outside -1..1")
            relevance[tid] = thirds
            trust[tid] = grade
    return JudgmentSet(relevance=relevance, trust=trust)


def write_judgments(judgments: JudgmentSet, path: str) -> None:
    """Write judgments as TSV, one row per id in mapping order."""
    with open(path, "w", encoding="utf-8") as fh:
        for tid, thirds in judgments.relevance.items():
            fh.write(f"{tid}\t{thirds}\t{judgments.trust[tid]}\n")
