"""Figures for evaluation reports and detection runs, rendered to PNG files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# fixed metadata keeps the files byte-stable across runs
_META = {"Software": None}


def _save(fig, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=100, metadata=_META)
    plt.close(fig)
    return path


def plot_metrics(report, out_dir):
    """Bar chart of precision, recall and F1 per emotion, plus score-vs-intensity scatters."""
    out_dir = Path(out_dir)
    rows = report.rows
    names = [r.emotion for r in rows]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    width = 0.25
    for k, (label, attr) in enumerate((("Precision", "precision"), ("Recall", "recall"), ("F1", "f1"))):
        xs = [i + (k - 1) * width for i in range(len(rows))]
        ax.bar(xs, [getattr(r, attr) for r in rows], width, label=label)
    ax.set_xticks(range(len(rows)), names)
    ax.set_ylim(0, 105)
    ax.set_ylabel("%")
    ax.legend(loc="lower right", fontsize="small")
    fig.tight_layout()
    paths = [_save(fig, out_dir / "metrics.png")]

    fig, axes = plt.subplots(1, max(len(rows), 1), figsize=(3 * max(len(rows), 1), 3), squeeze=False)
    for ax, r in zip(axes[0], rows):
        built = [x for x in r.results if x.graph_built]
        ax.scatter([x.intensity for x in built], [x.score for x in built], s=14)
        title = r.emotion if r.pearson is None else f"{r.emotion} (r={r.pearson:.2f})"
        ax.set_title(title, fontsize="small")
        ax.set_xlabel("gold intensity")
        ax.set_xlim(0, 1)
        ax.set_ylim(-0.05, 1.05)
    axes[0][0].set_ylabel("normalized count")
    fig.tight_layout()
    paths.append(_save(fig, out_dir / "correlation.png"))
    return paths


def plot_profile_totals(totals, out_dir):
    """Bar chart of evocation totals per emotion over a detection run."""
    names = sorted(totals)
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar(names, [totals[n] for n in names])
    ax.set_ylabel("evocations")
    fig.tight_layout()
    return [_save(fig, Path(out_dir) / "profile.png")]
