"""Command-line entry point: rank, eval, bench, gen.

Exit codes: 0 success, 1 usage error, 2 data error. Result data goes to
stdout, diagnostics to stderr. Reruns with identical flags reproduce
outputs byte-for-byte; the only nondeterminism anywhere is the measured
wall-clock in `bench`.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .agreement import AgreementParams, write_graph_csv
from .corpus import (
    Corpus,
    CorpusError,
    JudgmentError,
    SamplerConfig,
    filter_retweets,
    load_corpus,
    load_judgments,
    sample_candidates,
    write_corpus,
    write_judgments,
)
from .evaluation import (
    MissingJudgmentError,
    bench_timing,
    gen_synthetic,
    mean_relevance_at_k,
    mean_trust_at_k,
    ndcg_at_k,
    timing_csv,
)
from .ranking import (
    METHOD_AGREEMENT,
    METHOD_TFIDF,
    RankingConfig,
    candidate_graph,
    rank_by_tfidf,
    rank_graph,
    retrieve_candidates,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    """Flag-level validation failure discovered after parsing."""


class DataError(Exception):
    """Input files exist but their content cannot be used."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True, slots=True)
class RunManifest:
    """Every effective parameter of a run, defaults included."""

    command: str
    params: dict[str, object]

    def to_json(self) -> str:
        return json.dumps({"command": self.command, **self.params}, ensure_ascii=False)


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise UsageError(f"{flag} must be a comma-separated list of integers")
    if not values:
        raise UsageError(f"{flag} must list at least one integer")
    if any(v < 1 for v in values):
        raise UsageError(f"{flag} values must be positive")
    return values


def _load_and_select(args) -> Corpus:
    corpus = load_corpus(args.corpus)
    if args.filter_retweets:
        corpus = filter_retweets(corpus)
    if args.seed is not None:
        try:
            cfg = SamplerConfig(
                seed=args.seed, sample_size=args.sample_size, pool_cap=args.pool_cap
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        corpus = Corpus(tuple(sample_candidates(corpus, cfg)))
    return corpus


def _add_sampling_flags(sub) -> None:
    sub.add_argument("--filter-retweets", action="store_true",
                     help="drop tweets flagged as retweets before anything else")
    sub.add_argument("--seed", type=int, default=None,
                     help="enable seeded sampling of the corpus pool")
    sub.add_argument("--sample-size", type=int, default=200)
    sub.add_argument("--pool-cap", type=int, default=1500)


def _ranking_config(args, top_n: int, top_k: int) -> RankingConfig:
    try:
        return RankingConfig(top_n=top_n, top_k=top_k, params=AgreementParams(theta=args.theta))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cmd_rank(args) -> int:
    if not args.query.strip():
        raise UsageError("--query must be nonempty")
    cfg = _ranking_config(args, args.top_n, args.top_k)
    corpus = _load_and_select(args)
    try:
        candidates = retrieve_candidates(corpus, args.query, cfg.top_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not candidates:
        raise DataError("no candidates: corpus is empty")
    if args.baseline:
        if args.dump_graph:
            raise UsageError("--dump-graph requires the agreement method")
        ranked = rank_by_tfidf(candidates, args.query, cfg.top_k)
    else:
        graph = candidate_graph(candidates, cfg.params, workers=args.workers)
        if args.dump_graph:
            with open(args.dump_graph, "w", encoding="utf-8") as fh:
                write_graph_csv(graph, fh)
        ranked = rank_graph(graph, candidates, cfg.top_k)
    sys.stdout.write(ranked.to_json())
    return EXIT_OK


def _cmd_eval(args) -> int:
    k_list = sorted(set(_parse_int_list(args.k_list, "--k-list")))
    queries = _read_queries(args.queries)
    cfg = _ranking_config(args, args.top_n, min(max(k_list), args.top_n))
    corpus = load_corpus(args.corpus)
    judgments = load_judgments(args.judgments)
    metrics = (
        ("mean_relevance", mean_relevance_at_k),
        ("ndcg", ndcg_at_k),
        ("mean_trust", mean_trust_at_k),
    )
    rows: list[tuple[str, str, str, int, float]] = []
    sums: dict[tuple[str, str, int], float] = {}
    for query in queries:
        candidates = retrieve_candidates(corpus, query, cfg.top_n)
        ranked_by = {
            METHOD_AGREEMENT: rank_graph(
                candidate_graph(candidates, cfg.params, workers=args.workers),
                candidates,
                cfg.top_k,
            ),
            METHOD_TFIDF: rank_by_tfidf(candidates, query, cfg.top_k),
        }
        for method, ranked in ranked_by.items():
            for metric_name, metric_fn in metrics:
                for k in k_list:
                    value = metric_fn(ranked, judgments, k)
                    rows.append((query, method, metric_name, k, value))
                    sums[(method, metric_name, k)] = sums.get((method, metric_name, k), 0.0) + value
    lines = ["query,method,metric,k,value"]
    lines += [f"{q},{m},{name},{k},{v:.6f}" for q, m, name, k, v in rows]
    for method in (METHOD_AGREEMENT, METHOD_TFIDF):
        for metric_name, _ in metrics:
            for k in k_list:
                mean = sums[(method, metric_name, k)] / len(queries)
                lines.append(f"mean,{method},{metric_name},{k},{mean:.6f}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _read_queries(path: str) -> list[str]:
    queries = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                queries.append(line)
    if not queries:
        raise DataError(f"{path}: no queries")
    return queries


def _cmd_bench(args) -> int:
    if not args.query.strip():
        raise UsageError("--query must be nonempty")
    sizes = _parse_int_list(args.sizes, "--sizes")
    cfg = _ranking_config(args, max(sizes), min(20, max(sizes)))
    corpus = load_corpus(args.corpus)
    records = bench_timing(corpus, args.query, sizes, cfg, workers=args.workers)
    sys.stdout.write(timing_csv(records))
    return EXIT_OK


def _cmd_gen(args) -> int:
    clusters = _parse_int_list(args.clusters, "--clusters")
    if args.spam < 0:
        raise UsageError("--spam must be nonnegative")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus, judgments = gen_synthetic(args.seed, clusters, args.spam)
    corpus_path = out_dir / "corpus.jsonl"
    judgments_path = out_dir / "judgments.tsv"
    write_corpus(corpus, str(corpus_path))
    write_judgments(judgments, str(judgments_path))
    manifest = RunManifest(
        command="gen",
        params={
            "seed": args.seed,
            "clusters": clusters,
            "spam": args.spam,
            "out": str(out_dir),
            "corpus": str(corpus_path),
            "judgments": str(judgments_path),
            "tweets": len(corpus.tweets),
        },
    )
    sys.stdout.write(manifest.to_json() + "\n")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="agreerank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    rank = sub.add_parser("rank", parser_class=_Parser,
                          help="rerank a corpus for a query, JSON to stdout")
    rank.add_argument("--corpus", required=True)
    rank.add_argument("--query", required=True)
    rank.add_argument("--top-n", type=int, default=200)
    rank.add_argument("--top-k", type=int, default=20)
    rank.add_argument("--theta", type=float, default=0.6)
    rank.add_argument("--baseline", action="store_true",
                      help="rank by query TF-IDF cosine instead of agreement")
    rank.add_argument("--workers", type=int, default=None)
    rank.add_argument("--dump-graph", default=None, metavar="PATH",
                      help="also write the agreement graph as CSV")
    _add_sampling_flags(rank)
    rank.set_defaults(func=_cmd_rank)

    ev = sub.add_parser("eval", parser_class=_Parser,
                        help="metric CSV for both methods over a query file")
    ev.add_argument("--corpus", required=True)
    ev.add_argument("--judgments", required=True)
    ev.add_argument("--queries", required=True)
    ev.add_argument("--k-list", default="1,5,10,15,20")
    ev.add_argument("--top-n", type=int, default=200)
    ev.add_argument("--theta", type=float, default=0.6)
    ev.add_argument("--workers", type=int, default=None)
    ev.set_defaults(func=_cmd_eval)

    bench = sub.add_parser("bench", parser_class=_Parser,
                           help="timing CSV for agreement ranking")
    bench.add_argument("--corpus", required=True)
    bench.add_argument("--query", required=True)
    bench.add_argument("--sizes", default="100,200,300")
    bench.add_argument("--theta", type=float, default=0.6)
    bench.add_argument("--workers", type=int, default=None)
    bench.set_defaults(func=_cmd_bench)

    gen = sub.add_parser("gen", parser_class=_Parser,
                         help="write a synthetic corpus and judgments")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--clusters", default="150",
                     help="comma-separated paraphrase cluster sizes")
    gen.add_argument("--spam", type=int, default=50)
    gen.add_argument("--out", required=True, metavar="DIR")
    gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"agreerank {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CorpusError, JudgmentError, MissingJudgmentError, DataError) as exc:
        print(f"agreerank {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"agreerank {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"agreerank {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
