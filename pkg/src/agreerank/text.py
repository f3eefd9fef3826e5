"""Tokenization and TF * ln(IDF) vectorization."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass


def tokenize(text: str) -> list[str]:
    """Lowercase, split on whitespace, drop URL tokens, trim non-alphanumeric
    edges. A leading '@' or '#' survives trimming so mentions and hashtags
    keep their sigil.
    """
    out: list[str] = []
    for raw in text.lower().split():
        if raw.startswith(("http://", "https://")):
            continue
        tok = _trim(raw)
        if tok:
            out.append(tok)
    return out


def _trim(token: str) -> str:
    end = len(token)
    while end > 0 and not token[end - 1].isalnum():
        end -= 1
    start = 0
    while start < end and not token[start].isalnum():
        if token[start] in "@#":
            break
        start += 1
    return token[start:end]


@dataclass(frozen=True, slots=True)
class CorpusStats:
    doc_count: int
    doc_freq: dict[str, int]


@dataclass(frozen=True, slots=True)
class TokenVector:
    """Per-document token weights, L2-normalized unless the vector is zero.

    Tokens whose raw weight is zero (vanishing IDF, or unseen in the stats)
    stay in the mapping with weight 0.0: they still take part in soft token
    matching as targets.
    """

    weights: dict[str, float]
    source_id: str = ""

    def is_zero(self) -> bool:
        return all(w == 0.0 for w in self.weights.values())


def build_stats(docs: list[list[str]]) -> CorpusStats:
    """Document frequencies over tokenized documents (presence, not multiplicity)."""
    if not docs:
        raise ValueError("cannot build stats over an empty document list")
    doc_freq: dict[str, int] = {}
    for tokens in docs:
        for tok in dict.fromkeys(tokens):
            doc_freq[tok] = doc_freq.get(tok, 0) + 1
    return CorpusStats(doc_count=len(docs), doc_freq=doc_freq)


def vectorize(tokens: list[str], stats: CorpusStats, source_id: str = "") -> TokenVector:
    """Weight each distinct token by tf * ln(doc_count / doc_freq), then
    L2-normalize. Tokens absent from the stats weigh 0; an all-zero raw
    vector is returned as the zero vector.
    """
    counts = Counter(tokens)
    raw: dict[str, float] = {}
    for tok, tf in counts.items():
        df = stats.doc_freq.get(tok, 0)
        raw[tok] = tf * math.log(stats.doc_count / df) if df else 0.0
    norm = math.sqrt(sum(w * w for w in raw.values()))
    if norm == 0.0:
        return TokenVector(weights={tok: 0.0 for tok in raw}, source_id=source_id)
    return TokenVector(
        weights={tok: w / norm for tok, w in raw.items()}, source_id=source_id
    )
