"""Unique-pair aggregation, corpus statistics, export and LF categorisation.

Pairs are keyed by the exact ``(language, sf, lf)`` triple: case, spacing
and punctuation all count, so ``UNO``, ``Uno`` and ``U.N.O.`` are distinct.
"""

from __future__ import annotations

import datetime as dt
import io
import json
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field, fields
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import IO, Iterable, Mapping, Optional

TSV_COLUMNS = ("language", "sf", "lf", "count", "first_date", "last_date", "n_sources")
TOTAL = "TOTAL"


@dataclass
class PairRecord:
    language: str
    sf: str
    lf: str
    count: int
    first_date: dt.date
    last_date: dt.date
    sources: set = field(default_factory=set)
    categories: Counter = field(default_factory=Counter)

    @property
    def key(self) -> tuple:
        return (self.language, self.sf, self.lf)

    def absorb(self, other: "PairRecord") -> None:
        self.count += other.count
        self.first_date = min(self.first_date, other.first_date)
        self.last_date = max(self.last_date, other.last_date)
        self.sources |= other.sources
        self.categories.update(other.categories)

    def copy(self) -> "PairRecord":
        return PairRecord(
            self.language, self.sf, self.lf, self.count, self.first_date,
            self.last_date, set(self.sources), Counter(self.categories),
        )


@dataclass
class PairStore:
    records: dict = field(default_factory=dict)
    articles_seen: Counter = field(default_factory=Counter)
    articles_with_pairs: Counter = field(default_factory=Counter)

    def add(self, occ) -> None:
        rec = PairRecord(
            occ.language, occ.sf, occ.lf, 1, occ.date, occ.date,
            {occ.source}, Counter([occ.category]),
        )
        existing = self.records.get(rec.key)
        if existing is None:
            self.records[rec.key] = rec
        else:
            existing.absorb(rec)

    @property
    def languages(self) -> list:
        langs = set(self.articles_seen) | set(self.articles_with_pairs)
        langs.update(lang for lang, _, _ in self.records)
        return sorted(langs)

    def sorted_records(self) -> list:
        return [self.records[k] for k in sorted(self.records)]

    def filter_language(self, language: str) -> "PairStore":
        return PairStore(
            {k: r.copy() for k, r in self.records.items() if k[0] == language},
            Counter({language: self.articles_seen[language]}) if self.articles_seen[language] else Counter(),
            Counter({language: self.articles_with_pairs[language]}) if self.articles_with_pairs[language] else Counter(),
        )

    def __eq__(self, other):
        if not isinstance(other, PairStore):
            return NotImplemented
        # Counters compare equal regardless of explicit zero entries
        return (
            self.records == other.records
            and +self.articles_seen == +other.articles_seen
            and +self.articles_with_pairs == +other.articles_with_pairs
        )


def aggregate(occurrences: Iterable, article_tally: Optional[Mapping[str, int]] = None) -> PairStore:
    """Fold occurrences into a store.

    ``article_tally`` gives the number of analysed articles (AA) per
    language. AS counts distinct articles contributing at least one pair.
    """
    store = PairStore()
    selected = set()
    for occ in occurrences:
        store.add(occ)
        selected.add((occ.language, occ.article_id))
    for lang, n in (article_tally or {}).items():
        if n:
            store.articles_seen[lang] += n
    for lang, _ in selected:
        store.articles_with_pairs[lang] += 1
    return store


def merge_stores(a: PairStore, b: PairStore) -> PairStore:
    """Combine two stores built from disjoint article sets."""
    merged = PairStore({k: r.copy() for k, r in a.records.items()})
    for key, rec in b.records.items():
        if key in merged.records:
            merged.records[key].absorb(rec)
        else:
            merged.records[key] = rec.copy()
    merged.articles_seen = a.articles_seen + b.articles_seen
    merged.articles_with_pairs = a.articles_with_pairs + b.articles_with_pairs
    return merged


# -- statistics ---------------------------------------------------------------


@dataclass(frozen=True)
class LanguageStats:
    language: str
    aa: int
    as_: int
    pu: int
    po: int
    aa_share: Optional[Fraction]
    as_over_aa: Optional[Fraction]
    aa_over_pu: Optional[Fraction]
    po_per_100_articles: Optional[Fraction]
    po_over_pu: Optional[Fraction]
    frac_pu_f1: Optional[Fraction]
    frac_pu_f10: Optional[Fraction]
    frac_pu_f100: Optional[Fraction]
    avg_lf_per_sf: Optional[Fraction]
    avg_lf_per_ambiguous_sf: Optional[Fraction]
    avg_sf_per_lf: Optional[Fraction]
    avg_sf_per_ambiguous_lf: Optional[Fraction]


STATS_COLUMNS = tuple("as" if f.name == "as_" else f.name for f in fields(LanguageStats))


@dataclass(frozen=True)
class CorpusStats:
    rows: dict
    total: Optional[LanguageStats]

    def __getitem__(self, language: str) -> LanguageStats:
        if language == TOTAL:
            if self.total is None:
                raise KeyError(TOTAL)
            return self.total
        return self.rows[language]

    def all_rows(self) -> list:
        rows = [self.rows[k] for k in sorted(self.rows)]
        if self.total is not None:
            rows.append(self.total)
        return rows


def _ratio(num, den) -> Optional[Fraction]:
    return Fraction(num, den) if den else None


def _mean_of_ambiguous(group_sizes) -> Optional[Fraction]:
    amb = [n for n in group_sizes if n > 1]
    return _ratio(sum(amb), len(amb))


def _row(label, aa, as_, records, total_aa) -> LanguageStats:
    counts = [r.count for r in records]
    pu = len(counts)
    po = sum(counts)
    # (language, sf) and (language, lf) groups keep pooled rows per-language
    lf_per_sf = Counter((r.language, r.sf) for r in records)
    sf_per_lf = Counter((r.language, r.lf) for r in records)
    return LanguageStats(
        language=label,
        aa=aa,
        as_=as_,
        pu=pu,
        po=po,
        aa_share=_ratio(aa, total_aa),
        as_over_aa=_ratio(as_, aa),
        aa_over_pu=_ratio(aa, pu) if aa else None,
        po_per_100_articles=_ratio(po * 100, aa),
        po_over_pu=_ratio(po, pu),
        frac_pu_f1=_ratio(sum(1 for c in counts if c == 1), pu),
        frac_pu_f10=_ratio(sum(1 for c in counts if c >= 10), pu),
        frac_pu_f100=_ratio(sum(1 for c in counts if c >= 100), pu),
        avg_lf_per_sf=_ratio(pu, len(lf_per_sf)),
        avg_lf_per_ambiguous_sf=_mean_of_ambiguous(lf_per_sf.values()),
        avg_sf_per_lf=_ratio(pu, len(sf_per_lf)),
        avg_sf_per_ambiguous_lf=_mean_of_ambiguous(sf_per_lf.values()),
    )


def compute_stats(store: PairStore) -> CorpusStats:
    """Per-language corpus statistics plus a TOTAL row over pooled counts."""
    by_lang = defaultdict(list)
    for rec in store.records.values():
        by_lang[rec.language].append(rec)
    total_aa = sum(store.articles_seen.values())
    rows = {}
    for lang in store.languages:
        rows[lang] = _row(
            lang, store.articles_seen[lang], store.articles_with_pairs[lang],
            by_lang[lang], total_aa,
        )
    total = None
    if rows:
        total = _row(
            TOTAL, total_aa, sum(store.articles_with_pairs.values()),
            list(store.records.values()), total_aa,
        )
    return CorpusStats(rows, total)


def _fmt(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, Fraction):
        return f"{float(value):.6f}"
    return str(value)


def stats_tsv(stats: CorpusStats) -> bytes:
    out = io.StringIO()
    out.write("\t".join(STATS_COLUMNS) + "\n")
    for row in stats.all_rows():
        out.write("\t".join(_fmt(getattr(row, f.name)) for f in fields(LanguageStats)) + "\n")
    return out.getvalue().encode("utf-8")


# -- export / import ----------------------------------------------------------

_TSV_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"}
_TSV_ESCAPE_RE = re.compile(r"[\\\t\n\r]")
_TSV_UNESCAPES = {v: k for k, v in _TSV_ESCAPES.items()}
_TSV_UNESCAPE_RE = re.compile(r"\\[\\tnr]")


def tsv_escape(value: str) -> str:
    return _TSV_ESCAPE_RE.sub(lambda m: _TSV_ESCAPES[m.group()], value)


def tsv_unescape(value: str) -> str:
    return _TSV_UNESCAPE_RE.sub(lambda m: _TSV_UNESCAPES[m.group()], value)


def _record_to_json(rec: PairRecord) -> dict:
    return {
        "type": "pair",
        "language": rec.language,
        "sf": rec.sf,
        "lf": rec.lf,
        "count": rec.count,
        "first_date": rec.first_date.isoformat(),
        "last_date": rec.last_date.isoformat(),
        "sources": sorted(rec.sources),
        "categories": dict(sorted(rec.categories.items())),
    }


def export(store: PairStore, format: str = "tsv") -> bytes:
    """Serialise ``store`` deterministically as ``tsv`` or ``jsonl``.

    The TSV form is a report (language, sf, lf, count, first/last date,
    number of sources). The jsonl form also carries per-language article
    tallies, sources and categories, and round-trips through :func:`import_jsonl`.
    """
    out = io.StringIO()
    if format == "tsv":
        out.write("\t".join(TSV_COLUMNS) + "\n")
        for rec in store.sorted_records():
            row = (
                rec.language, tsv_escape(rec.sf), tsv_escape(rec.lf), str(rec.count),
                rec.first_date.isoformat(), rec.last_date.isoformat(), str(len(rec.sources)),
            )
            out.write("\t".join(row) + "\n")
    elif format == "jsonl":
        for lang in store.languages:
            aa, as_ = store.articles_seen[lang], store.articles_with_pairs[lang]
            if aa or as_:
                out.write(_dumps({"type": "tally", "language": lang, "aa": aa, "as": as_}))
        for rec in store.sorted_records():
            out.write(_dumps(_record_to_json(rec)))
    else:
        raise ValueError(f"unknown export format {format!r}")
    return out.getvalue().encode("utf-8")


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n"


def import_jsonl(data: bytes | str | IO) -> PairStore:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    lines = data.split("\n") if isinstance(data, str) else data
    store = PairStore()
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            line = line.decode("utf-8")
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
            kind = obj["type"]
            if kind == "tally":
                if obj["aa"]:
                    store.articles_seen[obj["language"]] += obj["aa"]
                if obj["as"]:
                    store.articles_with_pairs[obj["language"]] += obj["as"]
            elif kind == "pair":
                rec = PairRecord(
                    obj["language"], obj["sf"], obj["lf"], int(obj["count"]),
                    dt.date.fromisoformat(obj["first_date"]),
                    dt.date.fromisoformat(obj["last_date"]),
                    set(obj["sources"]), Counter(obj["categories"]),
                )
                if rec.key in store.records:
                    store.records[rec.key].absorb(rec)
                else:
                    store.records[rec.key] = rec
            else:
                raise ValueError(f"unknown record type {kind!r}")
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"store line {lineno}: {exc}") from None
    return store


def load_store(path) -> PairStore:
    with open(path, "rb") as fh:
        return import_jsonl(fh.read())


def parse_pairs_tsv(data: bytes | str) -> list:
    """Rows of an exported TSV as tuples (language, sf, lf, count, first, last, n_sources)."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    # only "\n" separates rows; escaped fields never contain it
    lines = [line.rstrip("\r") for line in data.split("\n")]
    if not lines or tuple(lines[0].split("\t")) != TSV_COLUMNS:
        raise ValueError("not a pair TSV export (header mismatch)")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) != len(TSV_COLUMNS):
            raise ValueError(f"TSV line {lineno}: expected {len(TSV_COLUMNS)} columns")
        lang, sf, lf, count, first, last, n_sources = cols
        rows.append((
            lang, tsv_unescape(sf), tsv_unescape(lf), int(count),
            dt.date.fromisoformat(first), dt.date.fromisoformat(last), int(n_sources),
        ))
    return rows


# -- categorisation -----------------------------------------------------------

OTHER = "other"
_NAME_PART_RE = re.compile(r"[^\W_]+")


def categorize_lf(lf: str, dictionaries: Mapping[str, Iterable[str]]) -> str:
    """First category (in mapping order) with a word occurring in ``lf``.

    Words are maximal letter/digit runs compared case-insensitively, so the
    elided "dell'Agenzia" contributes both "dell" and "agenzia".
    """
    parts = {w.casefold() for w in _NAME_PART_RE.findall(lf)}
    for category, vocab in dictionaries.items():
        if any(w.casefold() in parts for w in vocab):
            return category
    return OTHER


def _read_wordlist(path: Path) -> set:
    words = set()
    for line in path.read_text("utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return words


def load_dictionaries(root) -> dict:
    """Load ``<root>/<language>/<category>.txt`` word lists.

    Returns ``{language: {category: words}}`` with categories ordered by
    ``<root>/priority.txt`` when present, alphabetically otherwise.
    """
    root = Path(root)
    if not root.is_dir():
        raise FileNotFoundError(f"dictionary directory not found: {root}")
    priority = []
    prio_file = root / "priority.txt"
    if prio_file.exists():
        for line in prio_file.read_text("utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                priority.append(line)

    def order(cat):
        return (priority.index(cat), cat) if cat in priority else (len(priority), cat)

    result = {}
    for lang_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        cats = {p.stem: _read_wordlist(p) for p in lang_dir.glob("*.txt")}
        result[lang_dir.name] = {c: cats[c] for c in sorted(cats, key=order)}
    return result


def default_dictionaries() -> dict:
    root = resources.files("acronym_miner").joinpath("data/dictionaries")
    with resources.as_file(root) as path:
        return load_dictionaries(path)


def categorize_store(store: PairStore, dictionaries: Mapping[str, Mapping[str, Iterable[str]]]) -> list:
    """``(record, category)`` for every record, in export order."""
    return [
        (rec, categorize_lf(rec.lf, dictionaries.get(rec.language, {})))
        for rec in store.sorted_records()
    ]


def categorized_tsv(rows) -> bytes:
    out = io.StringIO()
    out.write("\t".join(TSV_COLUMNS + ("lf_category",)) + "\n")
    for rec, category in rows:
        out.write("\t".join((
            rec.language, tsv_escape(rec.sf), tsv_escape(rec.lf), str(rec.count),
            rec.first_date.isoformat(), rec.last_date.isoformat(),
            str(len(rec.sources)), category,
        )) + "\n")
    return out.getvalue().encode("utf-8")
