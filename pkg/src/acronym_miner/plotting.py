"""Figures written next to the TSV reports.

Figures are built on explicit ``Figure`` objects with the Agg canvas so no
global pyplot state is touched; safe to call from worker processes.
"""

from __future__ import annotations

import math
from collections import Counter
from contextlib import contextmanager
from pathlib import Path

import matplotlib
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

GOLDEN = (math.sqrt(5) - 1.0) / 2.0

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "svg.hashsalt": "acronym-miner",
    "pdf.fonttype": 42,
}


@contextmanager
def report_style():
    with matplotlib.rc_context(STYLE):
        yield


def new_figure(width=7.0, height=None, nrows=1, ncols=1):
    if height is None:
        height = width * GOLDEN
    fig = Figure(figsize=(width, height))
    FigureCanvasAgg(fig)
    axes = fig.subplots(nrows, ncols, squeeze=False)
    return fig, axes


def save(fig, path) -> None:
    # fixed metadata keeps repeated runs byte-comparable for png/svg/pdf
    fig.savefig(path, bbox_inches="tight", metadata=_metadata(path))


def _metadata(path):
    fmt = Path(path).suffix.lower().lstrip(".")
    return {"png": {"Software": None}, "svg": {"Date": None}, "pdf": {"CreationDate": None}}.get(fmt)


def _pct(x):
    return 100.0 * float(x) if x is not None else 0.0


def plot_corpus_stats(stats, path) -> None:
    """Per-language AS/AA bars and stacked pair-frequency bands."""
    rows = [stats.rows[k] for k in sorted(stats.rows)]
    if stats.total is not None:
        rows.append(stats.total)
    labels = [r.language for r in rows]
    x = range(len(rows))
    with report_style():
        fig, axes = new_figure(width=max(5.0, 0.45 * len(rows) + 2.5), height=5.0, nrows=2)
        ax = axes[0, 0]
        ax.bar(x, [_pct(r.as_over_aa) for r in rows], color="0.35")
        ax.set_ylabel("articles with pairs (%)")
        ax.set_xticks(list(x), labels)

        ax = axes[1, 0]
        once = [_pct(r.frac_pu_f1) for r in rows]
        ten = [_pct(r.frac_pu_f10) for r in rows]
        hundred = [_pct(r.frac_pu_f100) for r in rows]
        mid = [max(0.0, 100.0 - o - t) if r.pu else 0.0 for o, t, r in zip(once, ten, rows)]
        ten_only = [t - h for t, h in zip(ten, hundred)]
        bottom = [0.0] * len(rows)
        for values, label, shade in (
            (once, "f = 1", "0.8"),
            (mid, "2 ≤ f < 10", "0.6"),
            (ten_only, "10 ≤ f < 100", "0.4"),
            (hundred, "f ≥ 100", "0.1"),
        ):
            ax.bar(x, values, bottom=bottom, label=label, color=shade)
            bottom = [b + v for b, v in zip(bottom, values)]
        ax.set_ylabel("unique pairs (%)")
        ax.set_xticks(list(x), labels)
        ax.legend(loc="upper left", bbox_to_anchor=(1.0, 1.0), frameon=False)
        save(fig, path)


def plot_cluster_sizes(clusters, path) -> None:
    sizes = Counter(len(c.members) for c in clusters)
    with report_style():
        fig, axes = new_figure(width=5.0)
        ax = axes[0, 0]
        xs = sorted(sizes)
        ax.bar(xs, [sizes[s] for s in xs], color="0.35")
        ax.set_xlabel("LFs per cluster")
        ax.set_ylabel("clusters")
        if xs:
            ax.set_xticks(xs)
        save(fig, path)


def plot_extraction_scores(rows, path) -> None:
    """Grouped precision/recall/F1 bars per language."""
    labels = list(rows)
    width = 0.27
    with report_style():
        fig, axes = new_figure(width=max(4.5, 0.8 * len(labels) + 2.0))
        ax = axes[0, 0]
        for k, (name, shade) in enumerate((("precision", "0.2"), ("recall", "0.5"), ("f1", "0.8"))):
            vals = [getattr(rows[lang][1], name) or 0.0 for lang in labels]
            ax.bar([i + (k - 1) * width for i in range(len(labels))], vals, width, label=name, color=shade)
        ax.set_xticks(list(range(len(labels))), labels)
        ax.set_ylim(0, 1.05)
        ax.legend(frameon=False, ncols=3, loc="lower center")
        save(fig, path)

