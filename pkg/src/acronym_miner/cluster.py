"""Grouping of long-form variants that share a short form.

Long forms are compared with a length-normalised Levenshtein distance and
merged bottom-up by group-average clustering: at each step the two clusters
whose union has the highest mean pairwise similarity are merged, until no
union reaches the language's threshold.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional, Sequence

import numpy as np

# Slack for float round-off when comparing group averages. Averages of
# distinct rationals from realistic strings differ by far more than this.
EPS = 1e-12
DEFAULT_THRESHOLD = 0.7


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance (insertions, deletions, substitutions), case-sensitive."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(
                prev[j] + 1,
                cur[j - 1] + 1,
                prev[j - 1] + (ca != cb),
            ))
        prev = cur
    return prev[-1]


def normalized_distance(a: str, b: str) -> float:
    longest = max(len(a), len(b))
    if longest == 0:
        return 0.0
    return edit_distance(a, b) / longest


def similarity(a: str, b: str) -> float:
    """1 - normalized distance; 1 for identical strings, 0 when nothing is shared."""
    return 1.0 - normalized_distance(a, b)


@dataclass(frozen=True)
class Cluster:
    sf: str
    language: str
    members: tuple
    representative: str

    def to_json(self) -> dict:
        return {
            "language": self.language,
            "sf": self.sf,
            "representative": self.representative,
            "members": [{"lf": lf, "count": count} for lf, count in self.members],
        }


@dataclass
class ClusterConfig:
    thresholds: dict = field(default_factory=dict)
    default: float = DEFAULT_THRESHOLD

    def __post_init__(self):
        for t in list(self.thresholds.values()) + [self.default]:
            if not 0.0 <= t <= 1.0:
                raise ValueError(f"threshold {t} outside [0, 1]")

    def threshold(self, language: str) -> float:
        return self.thresholds.get(language, self.default)


def parse_thresholds(text: str) -> ClusterConfig:
    """Parse ``language=threshold`` lines (plus ``default=...``)."""
    thresholds = {}
    default = DEFAULT_THRESHOLD
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ValueError(f"threshold line {lineno}: expected key=value")
        try:
            t = float(value)
        except ValueError:
            raise ValueError(f"threshold line {lineno}: bad number {value.strip()!r}") from None
        if key == "default":
            default = t
        else:
            thresholds[key] = t
    return ClusterConfig(thresholds, default)


def load_thresholds(path) -> ClusterConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_thresholds(fh.read())


def representative(members: Iterable[tuple]) -> str:
    """Most frequent LF; ties go to the shorter, then lexicographically smaller one."""
    members = list(members)
    if not members:
        raise ValueError("representative() of an empty cluster")
    return min(members, key=lambda m: (-m[1], len(m[0]), m[0]))[0]


def similarity_matrix(items: Sequence[str], sim: Callable[[str, str], float] = similarity) -> np.ndarray:
    n = len(items)
    s = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            s[i, j] = s[j, i] = sim(items[i], items[j])
    return s


def agglomerate(s: np.ndarray, threshold: float) -> list:
    """Group-average agglomeration over a similarity matrix.

    Returns clusters as sorted lists of item indices, ordered by their
    smallest index. Ties between candidate merges go to the pair of clusters
    with the smallest indices.
    """
    n = s.shape[0]
    clusters = [[i] for i in range(n)]
    if n < 2:
        return clusters
    # within[c]: sum of similarities inside cluster c; cross[c, d]: between c and d
    within = np.zeros(n)
    cross = s.astype(float).copy()
    np.fill_diagonal(cross, 0.0)
    sizes = np.ones(n)
    alive = list(range(n))
    while len(alive) > 1:
        idx = np.array(alive)
        sz = sizes[idx]
        tot = sz[:, None] + sz[None, :]
        n_pairs = tot * (tot - 1) / 2
        avg = (within[idx][:, None] + within[idx][None, :] + cross[np.ix_(idx, idx)]) / n_pairs
        avg[np.tril_indices(len(idx))] = -np.inf
        best = avg.max()
        if best < threshold - EPS:
            break
        # row-major first hit among near-ties = smallest cluster indices
        flat = int(np.flatnonzero(avg >= best - EPS)[0])
        a, b = divmod(flat, len(idx))
        ca, cb = alive[a], alive[b]
        within[ca] += within[cb] + cross[ca, cb]
        sizes[ca] += sizes[cb]
        cross[ca, :] += cross[cb, :]
        cross[:, ca] += cross[:, cb]
        cross[ca, ca] = 0.0
        clusters[ca].extend(clusters[cb])
        clusters[cb] = []
        alive.remove(cb)
    return [sorted(clusters[c]) for c in alive]


def cluster_long_forms(
    group: Sequence[tuple],
    threshold: float,
    sf: str = "",
    language: str = "",
    sim: Callable[[str, str], float] = similarity,
) -> list:
    """Cluster the ``(lf, count)`` pairs of one (language, sf) group."""
    if not group:
        return []
    items = [lf for lf, _ in group]
    parts = agglomerate(similarity_matrix(items, sim), threshold)
    out = []
    for part in parts:
        members = tuple(group[i] for i in part)
        out.append(Cluster(sf, language, members, representative(members)))
    return out


def mean_pairwise_similarity(lfs: Sequence[str], sim: Callable[[str, str], float] = similarity) -> float:
    n = len(lfs)
    if n < 2:
        return 1.0
    total = sum(sim(lfs[i], lfs[j]) for i in range(n) for j in range(i + 1, n))
    return total / (n * (n - 1) / 2)


def group_records(records: Iterable) -> dict:
    """``{(language, sf): [(lf, count), ...]}`` with LFs in sorted order."""
    groups = defaultdict(list)
    for rec in records:
        groups[(rec.language, rec.sf)].append((rec.lf, rec.count))
    return {k: sorted(v) for k, v in sorted(groups.items())}


def cluster_groups(groups: Mapping[tuple, list], config: ClusterConfig) -> list:
    clusters = []
    for (language, sf), members in groups.items():
        clusters.extend(cluster_long_forms(members, config.threshold(language), sf, language))
    return clusters


def clusters_jsonl(clusters: Iterable[Cluster]) -> bytes:
    lines = [json.dumps(c.to_json(), ensure_ascii=False, sort_keys=True) for c in clusters]
    return "".join(line + "\n" for line in lines).encode("utf-8")


def read_clusters(data: bytes | str) -> list:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    out = []
    for lineno, line in enumerate(data.split("\n"), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
            members = tuple((m["lf"], int(m["count"])) for m in obj["members"])
            out.append(Cluster(obj["sf"], obj["language"], members, obj["representative"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"cluster line {lineno}: {exc}") from None
    return out


def threshold_sweep(group: Sequence[tuple], thresholds: Iterable[float]) -> dict:
    """Cluster count per threshold; the similarity matrix is built once."""
    s = similarity_matrix([lf for lf, _ in group])
    return {t: len(agglomerate(s, t)) for t in thresholds}


def find_cluster(clusters: Iterable[Cluster], lf: str) -> Optional[Cluster]:
    for c in clusters:
        if any(m[0] == lf for m in c.members):
            return c
    return None
