"""Figure rendering for the report commands.

Figures are written straight to files; nothing opens a window, so the
functions are safe in headless runs. The delimited output remains the
primary interface, figures are a side channel.
"""
from __future__ import annotations

import numpy as np


def _axes():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.2, 4.45))
    return plt, fig, ax


def render_membership(xs, curves: dict[str, np.ndarray], path) -> None:
    """One membership line per named set over the sampled x values."""
    plt, fig, ax = _axes()
    for name, mus in curves.items():
        ax.plot(xs, mus, label=name, linewidth=1.8)
    ax.set_xlabel("x")
    ax.set_ylabel("membership")
    ax.set_ylim(-0.02, 1.05)
    ax.legend(loc="best")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_sweep(rows, path) -> None:
    """Comparative value against the first fusion weight."""
    plt, fig, ax = _axes()
    w1 = [r[0] for r in rows]
    c = [r[2] for r in rows]
    ax.plot(w1, c, marker="o", markersize=3.5, linewidth=1.6)
    ax.set_xlabel("weight on the dominant component")
    ax.set_ylabel("comparative value")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
