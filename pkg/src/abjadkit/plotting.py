"""Figures for the command-line reports, rendered off-screen to files."""

from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_grammar_sizes(rows: Sequence[tuple[str, int, int]], path) -> None:
    """Grouped bars of state and arc counts, one group per grammar."""
    labels = [r[0] for r in rows]
    xs = range(len(rows))
    fig, ax = plt.subplots(figsize=(max(6.0, 0.6 * len(rows)), 4.0))
    width = 0.4
    ax.bar([x - width / 2 for x in xs], [r[1] for r in rows], width, label="states")
    ax.bar([x + width / 2 for x in xs], [r[2] for r in rows], width, label="arcs")
    ax.set_yscale("log")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=45, ha="right")
    ax.set_ylabel("count")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_change_rates(rates: Mapping[str, tuple[float, float]], path, title: str = "") -> None:
    """Bars of token and type change percentages per normalization stage."""
    stages = list(rates)
    xs = range(len(stages))
    fig, ax = plt.subplots(figsize=(5.0, 3.5))
    width = 0.35
    ax.bar([x - width / 2 for x in xs], [rates[s][0] for s in stages], width, label="tokens")
    ax.bar([x + width / 2 for x in xs], [rates[s][1] for s in stages], width, label="types")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(stages)
    ax.set_ylabel("changed (%)")
    if title:
        ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
