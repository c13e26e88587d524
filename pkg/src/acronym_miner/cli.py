"""Command-line front end: ``acronym-miner <subcommand> ...``.

Exit status: 0 success, 1 usage error, 2 data error (unreadable or
malformed input).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce
from importlib import resources
from pathlib import Path
from typing import Optional

from . import cluster as clu
from . import evalharness as ev
from . import store as st
from .corpus import Diagnostic, read_articles
from .extractor import extract_pairs
from .filters import Stoplist, default_stoplist, load_stoplist

log = logging.getLogger("acronym_miner")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    stoplist: Optional[Path] = None
    thresholds: Optional[Path] = None
    dictionaries: Optional[Path] = None
    input: Optional[Path] = None
    output: Optional[Path] = None
    jobs: int = 1
    match_mode: str = ev.EXACT
    language: Optional[str] = None

    def check(self) -> None:
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        for name in ("stoplist", "thresholds", "input"):
            path = getattr(self, name)
            if path is not None and not path.is_file():
                raise DataError(f"{name} file not found: {path}")
        if self.dictionaries is not None and not self.dictionaries.is_dir():
            raise DataError(f"dictionary directory not found: {self.dictionaries}")


def _config(args) -> RunConfig:
    cfg = RunConfig(
        stoplist=getattr(args, "stoplist", None),
        thresholds=getattr(args, "thresholds", None),
        dictionaries=getattr(args, "dictionaries", None),
        input=getattr(args, "input", None),
        output=getattr(args, "out", None),
        jobs=getattr(args, "jobs", 1),
        match_mode=getattr(args, "match_mode", ev.EXACT),
        language=args.lang,
    )
    cfg.check()
    return cfg


def _write(path: Optional[Path], data: bytes) -> None:
    if path is None or str(path) == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        path.write_bytes(data)


def _read_bytes(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None


def _load_store(path: Path, language: Optional[str]) -> st.PairStore:
    store = st.import_jsonl(_read_bytes(path))
    return store.filter_language(language) if language else store


# -- extract ------------------------------------------------------------------


def _extract_shard(job):
    articles, stoplist = job
    occurrences, rejects = [], []
    for article in articles:
        occurrences.extend(extract_pairs(article, stoplist, rejects))
    tally = Counter(a.language for a in articles)
    return occurrences, rejects, st.aggregate(occurrences, tally)


def _shards(items, n):
    size, extra = divmod(len(items), n)
    out, start = [], 0
    for i in range(n):
        end = start + size + (i < extra)
        out.append(items[start:end])
        start = end
    return out


def run_extraction(articles, stoplist: Stoplist, jobs: int = 1):
    """Extract and aggregate, sharding articles over ``jobs`` processes.

    Returns ``(occurrences, rejects, store)``; occurrences keep input order.
    """
    work = [(shard, stoplist) for shard in _shards(list(articles), jobs)]
    if jobs == 1:
        results = [_extract_shard(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_extract_shard, work))
    occurrences = [o for r in results for o in r[0]]
    rejects = [x for r in results for x in r[1]]
    store = reduce(st.merge_stores, (r[2] for r in results), st.PairStore())
    return occurrences, rejects, store


def occurrence_to_json(occ) -> dict:
    return {
        "article_id": occ.article_id,
        "language": occ.language,
        "date": occ.date.isoformat(),
        "source": occ.source,
        "category": occ.category,
        "sf": occ.sf,
        "lf": occ.lf,
        "sf_offsets": list(occ.sf_offsets),
        "lf_offsets": list(occ.lf_offsets),
    }


def _jsonl(objs) -> bytes:
    return "".join(json.dumps(o, ensure_ascii=False, sort_keys=True) + "\n" for o in objs).encode("utf-8")


def cmd_extract(args, cfg: RunConfig) -> int:
    stoplist = load_stoplist(cfg.stoplist) if cfg.stoplist else default_stoplist()
    diagnostics: list[Diagnostic] = []
    try:
        articles = read_articles(cfg.input, diagnostics)
    except OSError as exc:
        raise DataError(f"cannot read {cfg.input}: {exc.strerror}") from None
    for d in diagnostics:
        log.warning("%s: %s", cfg.input, d)
    if cfg.language:
        articles = [a for a in articles if a.language == cfg.language]
    occurrences, rejects, store = run_extraction(articles, stoplist, cfg.jobs)

    _write(cfg.output, st.export(store, "tsv"))
    store_path = args.store or cfg.output.with_suffix(".store.jsonl")
    _write(store_path, st.export(store, "jsonl"))
    if args.occurrences:
        _write(args.occurrences, _jsonl(occurrence_to_json(o) for o in occurrences))
    if args.rejects:
        lines = ["article_id\tlanguage\tsf\tlf\trule\n"]
        lines += [
            f"{r.article_id}\t{r.language}\t{st.tsv_escape(r.sf)}\t{st.tsv_escape(r.lf)}\t{r.rule}\n"
            for r in rejects
        ]
        _write(args.rejects, "".join(lines).encode("utf-8"))
    log.info(
        "%d articles, %d pair occurrences, %d unique pairs, %d rejected, %d bad records",
        len(articles), len(occurrences), len(store.records), len(rejects), len(diagnostics),
    )
    return EXIT_OK


# -- stats / cluster / categorize ---------------------------------------------


def cmd_stats(args, cfg: RunConfig) -> int:
    stats = st.compute_stats(_load_store(cfg.input, cfg.language))
    _write(cfg.output, st.stats_tsv(stats))
    if args.figure:
        from .plotting import plot_corpus_stats

        plot_corpus_stats(stats, args.figure)
    return EXIT_OK


def _pair_records(path: Path, language: Optional[str]) -> list:
    data = _read_bytes(path)
    if path.suffix == ".tsv":
        rows = st.parse_pairs_tsv(data)
        records = [st.PairRecord(r[0], r[1], r[2], r[3], r[4], r[5]) for r in rows]
    else:
        records = st.import_jsonl(data).sorted_records()
    return [r for r in records if language is None or r.language == language]


def cmd_cluster(args, cfg: RunConfig) -> int:
    if cfg.thresholds:
        config = clu.load_thresholds(cfg.thresholds)
    else:
        config = clu.parse_thresholds(
            resources.files("acronym_miner").joinpath("data/thresholds.cfg").read_text("utf-8")
        )
    groups = clu.group_records(_pair_records(cfg.input, cfg.language))
    clusters = clu.cluster_groups(groups, config)
    _write(cfg.output, clu.clusters_jsonl(clusters))
    if args.figure:
        from .plotting import plot_cluster_sizes

        plot_cluster_sizes(clusters, args.figure)
    return EXIT_OK


def cmd_categorize(args, cfg: RunConfig) -> int:
    dictionaries = st.load_dictionaries(cfg.dictionaries) if cfg.dictionaries else st.default_dictionaries()
    store = _load_store(cfg.input, cfg.language)
    _write(cfg.output, st.categorized_tsv(st.categorize_store(store, dictionaries)))
    return EXIT_OK


# -- evaluation ---------------------------------------------------------------


def _read_jsonl_rows(path: Path) -> list:
    rows = []
    for lineno, line in enumerate(_read_bytes(path).decode("utf-8").split("\n"), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            try:
                rows.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise DataError(f"{path} line {lineno}: {exc.msg}") from None
    return rows


def cmd_eval_extract(args, cfg: RunConfig) -> int:
    gold = ev.read_gold_extraction(_read_bytes(args.gold))
    rows = _read_jsonl_rows(args.pred)
    if cfg.language:
        gold = {k: g for k, g in gold.items() if g.language == cfg.language}
        rows = [r for r in rows if r.get("language") == cfg.language]
    try:
        pred = ev.predictions_from_occurrences(rows)
    except KeyError as exc:
        raise DataError(f"{args.pred}: occurrence record missing {exc}") from None
    report = ev.score_extraction_by_language(pred, gold, cfg.match_mode)
    _write(cfg.output, ev.extraction_report_tsv(report))
    if args.figure:
        from .plotting import plot_extraction_scores

        plot_extraction_scores(report, args.figure)
    return EXIT_OK


def cmd_eval_cluster(args, cfg: RunConfig) -> int:
    gold = ev.read_cluster_gold(_read_bytes(args.gold))
    system = clu.read_clusters(_read_bytes(args.pred))
    if cfg.language:
        gold = ev.ClusterGold(
            {g: p for g, p in gold.partitions.items() if g[0] == cfg.language},
            {g: f for g, f in gold.flags.items() if g[0] == cfg.language},
        )
        system = [c for c in system if c.language == cfg.language]
    _write(cfg.output, ev.cluster_report_tsv(ev.score_clusters_by_language(system, gold)))
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="acronym-miner", description="Long-form (short-form) acronym mining.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, func, help):
        p = sub.add_parser(name, help=help, description=help)
        p.set_defaults(func=func)
        p.add_argument("--lang", metavar="XX", help="restrict to one language code")
        return p

    p = add("extract", cmd_extract, "articles jsonl -> pair TSV, store jsonl, occurrences")
    p.add_argument("--in", dest="input", type=Path, required=True, help="articles jsonl")
    p.add_argument("--out", type=Path, required=True, help="aggregated pair TSV")
    p.add_argument("--stoplist", type=Path, help="stoplist file (default: bundled)")
    p.add_argument("--store", type=Path, help="store jsonl (default: OUT with .store.jsonl)")
    p.add_argument("--occurrences", type=Path, help="write every pair occurrence as jsonl")
    p.add_argument("--rejects", type=Path, help="write filtered-out matches with rule ids")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")

    p = add("stats", cmd_stats, "store jsonl -> per-language statistics TSV")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--out", type=Path, help="TSV path (default stdout)")
    p.add_argument("--figure", type=Path, help="also render a figure (png/svg/pdf)")

    p = add("cluster", cmd_cluster, "store jsonl or pair TSV -> LF clusters jsonl")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--out", type=Path, help="jsonl path (default stdout)")
    p.add_argument("--thresholds", type=Path, help="language=threshold config (default: bundled)")
    p.add_argument("--figure", type=Path, help="also render a cluster-size histogram")

    p = add("eval-extract", cmd_eval_extract, "occurrences + gold -> precision/recall/F1 TSV")
    p.add_argument("--pred", type=Path, required=True, help="occurrences jsonl from extract")
    p.add_argument("--gold", type=Path, required=True, help="gold extraction jsonl")
    p.add_argument("--out", type=Path, help="TSV path (default stdout)")
    p.add_argument("--match-mode", choices=ev.MATCH_MODES, default=ev.EXACT)
    p.add_argument("--figure", type=Path, help="also render a P/R/F1 bar chart")

    p = add("eval-cluster", cmd_eval_cluster, "clusters + gold -> clustering evaluation TSV")
    p.add_argument("--pred", type=Path, required=True, help="clusters jsonl from cluster")
    p.add_argument("--gold", type=Path, required=True, help="gold cluster jsonl")
    p.add_argument("--out", type=Path, help="TSV path (default stdout)")

    p = add("categorize", cmd_categorize, "store jsonl + dictionaries -> categorised pair TSV")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--dictionaries", type=Path, help="dictionary directory (default: bundled)")
    p.add_argument("--out", type=Path, help="TSV path (default stdout)")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(levelname)s: %(message)s",
    )
    try:
        cfg = _config(args)
        for name in ("pred", "gold"):
            path = getattr(args, name, None)
            if path is not None and not path.is_file():
                raise DataError(f"{name} file not found: {path}")
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"acronym-miner: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, ValueError, OSError) as exc:
        print(f"acronym-miner: error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())
