"""Scoring of extraction output and LF clusterings against gold files."""

from __future__ import annotations

import io
import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

EXACT = "exact"
SF_ONLY = "sf-only"
MATCH_MODES = (EXACT, SF_ONLY)

RECOGNITION_ERROR = "recognition_error"
BORDER_ERROR = "border_error"
FLAGS = (RECOGNITION_ERROR, BORDER_ERROR)


def normalize_ws(text: str) -> str:
    return " ".join(text.split())


@dataclass(frozen=True)
class GoldPair:
    sf: str
    lf: str
    sf_span: Optional[tuple] = None
    lf_span: Optional[tuple] = None


@dataclass
class GoldAnnotation:
    article_id: str
    pairs: list = field(default_factory=list)
    language: str = ""


@dataclass(frozen=True)
class PRF:
    tp: int
    fp: int
    fn: int
    precision: Optional[float]
    recall: Optional[float]
    f1: Optional[float]

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int) -> "PRF":
        p = tp / (tp + fp) if tp + fp else None
        r = tp / (tp + fn) if tp + fn else None
        f1 = None
        if p is not None and r is not None:
            # equals 2PR/(P+R) and stays defined when P = R = 0
            f1 = 2 * tp / (2 * tp + fp + fn)
        return cls(tp, fp, fn, p, r, f1)


def _key(sf: str, lf: str, mode: str):
    if mode == EXACT:
        return (normalize_ws(sf), normalize_ws(lf))
    if mode == SF_ONLY:
        return normalize_ws(sf)
    raise ValueError(f"unknown match mode {mode!r}")


def _counts(predicted, gold, mode) -> tuple:
    gold_ids = set(gold)
    unknown = sorted(set(predicted) - gold_ids)
    if unknown:
        raise ValueError(f"predictions for article(s) missing from gold: {', '.join(unknown[:5])}")
    tp = fp = fn = 0
    for article_id in sorted(gold_ids):
        want = {_key(p.sf, p.lf, mode) for p in gold[article_id].pairs}
        got = {_key(sf, lf, mode) for sf, lf in predicted.get(article_id, ())}
        tp += len(want & got)
        fp += len(got - want)
        fn += len(want - got)
    return tp, fp, fn


def score_extraction(
    predicted: Mapping[str, Iterable[tuple]],
    gold: Mapping[str, GoldAnnotation],
    match_mode: str = EXACT,
) -> PRF:
    """Micro precision/recall/F1 over per-article sets of (sf, lf) pairs.

    The gold article ids define the evaluation universe: gold articles
    without predictions count as empty, and a prediction for an article
    outside the gold set raises ``ValueError``.
    """
    return PRF.from_counts(*_counts(predicted, gold, match_mode))


def score_extraction_by_language(predicted, gold, match_mode: str = EXACT) -> dict:
    """``{language: (n_gold_pairs, PRF)}`` plus a ``TOTAL`` entry."""
    by_lang = defaultdict(dict)
    for aid, ann in gold.items():
        by_lang[ann.language][aid] = ann
    out = {}
    for lang in sorted(by_lang):
        sub_gold = by_lang[lang]
        sub_pred = {k: v for k, v in predicted.items() if k in sub_gold}
        n = sum(len({_key(p.sf, p.lf, match_mode) for p in a.pairs}) for a in sub_gold.values())
        out[lang] = (n, score_extraction(sub_pred, sub_gold, match_mode))
    total_n = sum(n for n, _ in out.values())
    out["TOTAL"] = (total_n, score_extraction(predicted, gold, match_mode))
    return out


def read_gold_extraction(data: bytes | str) -> dict:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    gold = {}
    for lineno, line in enumerate(data.split("\n"), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
            aid = obj["article_id"]
            pairs = [
                GoldPair(
                    p["sf"], p["lf"],
                    tuple(p["sf_span"]) if p.get("sf_span") else None,
                    tuple(p["lf_span"]) if p.get("lf_span") else None,
                )
                for p in obj["pairs"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"gold line {lineno}: {exc}") from None
        if aid in gold:
            raise ValueError(f"gold line {lineno}: duplicate article id {aid!r}")
        gold[aid] = GoldAnnotation(aid, pairs, obj.get("language", ""))
    return gold


def predictions_from_occurrences(rows: Iterable[Mapping]) -> dict:
    pred = defaultdict(set)
    for row in rows:
        pred[row["article_id"]].add((row["sf"], row["lf"]))
    return dict(pred)


# -- clustering ---------------------------------------------------------------


@dataclass
class ClusterGold:
    partitions: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)

    def label_of(self, group: tuple) -> dict:
        return {lf: i for i, part in enumerate(self.partitions[group]) for lf in part}


@dataclass(frozen=True)
class ClusterEvalReport:
    n_unique_lfs: int
    n_unique_sfs: int
    n_clusters: int
    n_clusters_ge2: int
    precision: Optional[float]
    recognition_error_rate: Optional[float]
    border_error_rate: Optional[float]


def _majority(labels: list) -> int:
    counts = Counter(labels)
    top = max(counts.values())
    return min(label for label, c in counts.items() if c == top)


def score_clusters(system: Iterable, gold: ClusterGold) -> ClusterEvalReport:
    """Score a clustering with majority-label precision and error-flag rates.

    An LF counts as correctly clustered when its gold cluster is the most
    common gold cluster among its system cluster's members (ties go to the
    gold cluster listed first). Flag rates are per evaluated LF and do not
    depend on the clustering.
    """
    by_group = defaultdict(list)
    for c in system:
        by_group[(c.language, c.sf)].append(c)
    if set(by_group) != set(gold.partitions):
        missing = set(gold.partitions) ^ set(by_group)
        raise ValueError(f"system and gold cover different (language, sf) groups: {sorted(missing)[:5]}")
    n_lfs = correct = n_clusters = n_ge2 = 0
    n_recog = n_border = 0
    for group in sorted(by_group):
        labels = gold.label_of(group)
        sys_lfs = [m[0] for c in by_group[group] for m in c.members]
        if len(sys_lfs) != len(set(sys_lfs)) or set(sys_lfs) != set(labels):
            raise ValueError(f"LF coverage mismatch for group {group}")
        for c in by_group[group]:
            member_labels = [labels[lf] for lf, _ in c.members]
            majority = _majority(member_labels)
            correct += sum(1 for lab in member_labels if lab == majority)
            n_clusters += 1
            n_ge2 += len(c.members) >= 2
        flags = gold.flags.get(group, {})
        for lf in sys_lfs:
            f = flags.get(lf, ())
            n_recog += RECOGNITION_ERROR in f
            n_border += BORDER_ERROR in f
        n_lfs += len(sys_lfs)
    return ClusterEvalReport(
        n_unique_lfs=n_lfs,
        n_unique_sfs=len(by_group),
        n_clusters=n_clusters,
        n_clusters_ge2=n_ge2,
        precision=correct / n_lfs if n_lfs else None,
        recognition_error_rate=n_recog / n_lfs if n_lfs else None,
        border_error_rate=n_border / n_lfs if n_lfs else None,
    )


def read_cluster_gold(data: bytes | str) -> ClusterGold:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    gold = ClusterGold()
    for lineno, line in enumerate(data.split("\n"), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
            group = (obj["language"], obj["sf"])
            partition = [list(part) for part in obj["clusters"]]
            flags = {lf: tuple(fl) for lf, fl in obj.get("flags", {}).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"cluster gold line {lineno}: {exc}") from None
        all_lfs = [lf for part in partition for lf in part]
        if len(all_lfs) != len(set(all_lfs)):
            raise ValueError(f"cluster gold line {lineno}: LF listed twice")
        bad = [f for fl in flags.values() for f in fl if f not in FLAGS]
        if bad:
            raise ValueError(f"cluster gold line {lineno}: unknown flag {bad[0]!r}")
        if group in gold.partitions:
            raise ValueError(f"cluster gold line {lineno}: duplicate group {group}")
        gold.partitions[group] = partition
        gold.flags[group] = flags
    return gold


def score_clusters_by_language(system: list, gold: ClusterGold) -> dict:
    out = {}
    for lang in sorted({lang for lang, _ in gold.partitions}):
        sub_gold = ClusterGold(
            {g: p for g, p in gold.partitions.items() if g[0] == lang},
            {g: f for g, f in gold.flags.items() if g[0] == lang},
        )
        out[lang] = score_clusters([c for c in system if c.language == lang], sub_gold)
    return out


# -- reports ------------------------------------------------------------------

EXTRACTION_COLUMNS = ("language", "n", "tp", "fp", "fn", "precision", "recall", "f1")
CLUSTER_COLUMNS = (
    "language", "n_unique_lfs", "n_unique_sfs", "n_clusters", "n_clusters_ge2",
    "precision", "recognition_error", "border_error",
)


def _fmt(x) -> str:
    if x is None:
        return "NA"
    if isinstance(x, float):
        return f"{x:.4f}"
    return str(x)


def extraction_report_tsv(rows: Mapping[str, tuple]) -> bytes:
    out = io.StringIO()
    out.write("\t".join(EXTRACTION_COLUMNS) + "\n")
    for lang, (n, prf) in rows.items():
        vals = (lang, n, prf.tp, prf.fp, prf.fn, prf.precision, prf.recall, prf.f1)
        out.write("\t".join(_fmt(v) for v in vals) + "\n")
    return out.getvalue().encode("utf-8")


def cluster_report_tsv(rows: Mapping[str, ClusterEvalReport]) -> bytes:
    out = io.StringIO()
    out.write("\t".join(CLUSTER_COLUMNS) + "\n")
    for lang, r in rows.items():
        vals = (
            lang, r.n_unique_lfs, r.n_unique_sfs, r.n_clusters, r.n_clusters_ge2,
            r.precision, r.recognition_error_rate, r.border_error_rate,
        )
        out.write("\t".join(_fmt(v) for v in vals) + "\n")
    return out.getvalue().encode("utf-8")
