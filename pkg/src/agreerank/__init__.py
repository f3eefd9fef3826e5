"""Agreement-based reranking of short social posts.

Candidates retrieved for a query are scored by how strongly their content
agrees with every other candidate (soft TF-IDF with Jaro-Winkler token
matching); the ranking surfaces posts that many independent posts echo.
"""

from .agreement import (
    AgreementGraph,
    AgreementParams,
    agreement_weight,
    build_graph,
    soft_tfidf,
    vertex_score,
    write_graph_csv,
)
from .corpus import (
    Corpus,
    CorpusError,
    JudgmentError,
    JudgmentSet,
    SamplerConfig,
    Tweet,
    filter_retweets,
    load_corpus,
    load_judgments,
    sample_candidates,
    write_corpus,
    write_judgments,
)
from .evaluation import (
    MetricCurve,
    MissingJudgmentError,
    TimingRecord,
    bench_timing,
    gen_synthetic,
    mean_relevance_at_k,
    mean_trust_at_k,
    ndcg_at_k,
    timing_csv,
)
from .ranking import (
    RankedEntry,
    RankedList,
    RankingConfig,
    candidate_graph,
    rank_by_agreement,
    rank_by_tfidf,
    rank_graph,
    retrieve_candidates,
)
from .rng import SplitMix64
from .strsim import jaro, jaro_winkler
from .text import CorpusStats, TokenVector, build_stats, tokenize, vectorize

__version__ = "0.1.0"
