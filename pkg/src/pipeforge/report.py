"""Render report figures next to the delimited outputs.

Every figure lands as a PNG beside the CSV it visualizes: the training loss
curve next to the loss log, operator frequency bars next to the frequency
tables, and per-dataset score bars next to the results table.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def render_loss_curve(epochs: list[int], mean_nll: list[float],
                      path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(epochs, mean_nll, marker="o", color="#1f6f8b")
    ax.set_xlabel("epoch")
    ax.set_ylabel("mean trace NLL")
    ax.set_title("Generator training loss")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_frequency_bars(table: list[tuple[str, int]], title: str,
                          path: Path, top_n: int = 15) -> Path:
    rows = table[:top_n]
    fig, ax = plt.subplots(figsize=(7, max(2.5, 0.35 * len(rows) + 1.2)))
    if rows:
        names = [label.rsplit(".", 1)[-1] for label, _ in rows]
        counts = [count for _, count in rows]
        ax.barh(range(len(rows)), counts, color="#3a7d44")
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels(names, fontsize=8)
        ax.invert_yaxis()
    else:
        ax.text(0.5, 0.5, "no data", ha="center", va="center")
    ax.set_xlabel("count")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_score_bars(rows: list[tuple[str, str, float]], path: Path) -> Path:
    """Grouped score bars: rows are (dataset, system, score)."""
    datasets = sorted({r[0] for r in rows})
    systems = sorted({r[1] for r in rows})
    scores = {(d, s): v for d, s, v in rows}
    width = 0.8 / max(1, len(systems))
    fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(datasets)), 4))
    for j, system in enumerate(systems):
        xs = [i + j * width for i in range(len(datasets))]
        ys = [scores.get((d, system), 0.0) for d in datasets]
        ax.bar(xs, ys, width=width, label=system)
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(datasets))])
    ax.set_xticklabels(datasets, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("score")
    ax.set_title("Per-dataset scores")
    if systems:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
