"""Figure rendering for the CLI report paths (headless Agg backend)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = [
    "save_ttest_figure",
    "save_mining_figure",
    "save_classify_figure",
    "save_bench_figure",
]

_DPI = 120


def _finish(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def save_ttest_figure(rows, alpha: float, path) -> Path:
    """Per-view consistency evidence as -log10(p) bars against the alpha line.

    ``rows`` holds (view name, p value or None); degenerate views (None) are
    drawn as hatched zero-height bars so they stay visible in the figure.
    """
    names = [name for name, _ in rows]
    heights = [0.0 if p is None else -np.log10(max(p, 1e-300)) for _, p in rows]
    fig, ax = plt.subplots(figsize=(max(4.0, 1.2 * len(rows) + 2), 3.5))
    bars = ax.bar(range(len(rows)), heights, color="#4878cf")
    for bar, (_, p) in zip(bars, rows):
        if p is None:
            bar.set_hatch("//")
            bar.set_color("#cccccc")
    ax.axhline(-np.log10(alpha), color="#d65f5f", linestyle="--", label=f"alpha = {alpha:g}")
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels(names, rotation=20, ha="right")
    ax.set_ylabel("-log10 p")
    ax.set_title("side-view consistency with the class labels")
    ax.legend()
    return _finish(fig, path)


def save_mining_figure(scores, path) -> Path:
    """Ranked objective values of the selected patterns (lower is better)."""
    fig, ax = plt.subplots(figsize=(max(4.0, 0.5 * len(scores) + 3), 3.5))
    ax.bar(range(1, len(scores) + 1), scores, color="#6acc65")
    ax.set_xlabel("rank")
    ax.set_ylabel("objective q")
    ax.set_title("selected subgraph features")
    ax.axhline(0.0, color="black", linewidth=0.8)
    return _finish(fig, path)


def save_classify_figure(fold_accuracies, mean_accuracy: float, path) -> Path:
    k = len(fold_accuracies)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.9 * k + 2.5), 3.5))
    ax.bar(range(1, k + 1), fold_accuracies, color="#4878cf")
    ax.axhline(mean_accuracy, color="#d65f5f", linestyle="--", label=f"mean = {mean_accuracy:.3f}")
    ax.set_ylim(0.0, 1.05)
    ax.set_xticks(range(1, k + 1))
    ax.set_xlabel("fold")
    ax.set_ylabel("accuracy")
    ax.set_title("cross-validated accuracy")
    ax.legend(loc="lower right")
    return _finish(fig, path)


def save_bench_figure(rows, path) -> Path:
    """Pruned vs. unpruned search effort across support thresholds.

    ``rows``: (min_sup, explored_pruned, explored_unpruned, sec_p, sec_u).
    """
    rows = list(rows)
    sup = [r[0] for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8.0, 3.5))
    ax1.plot(sup, [r[1] for r in rows], "o-", label="pruned")
    ax1.plot(sup, [r[2] for r in rows], "s--", label="unpruned")
    ax1.set_xlabel("min support")
    ax1.set_ylabel("nodes explored")
    ax1.invert_xaxis()
    ax1.legend()
    ax2.plot(sup, [r[3] for r in rows], "o-", label="pruned")
    ax2.plot(sup, [r[4] for r in rows], "s--", label="unpruned")
    ax2.set_xlabel("min support")
    ax2.set_ylabel("seconds")
    ax2.invert_xaxis()
    ax2.legend()
    fig.suptitle("bound-based pruning effort")
    return _finish(fig, path)
