"""Render sweep results to image files (Agg backend, no display needed)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .sweep import SweepResult  # noqa: E402


def render_sweep_plot(result: SweepResult, path: str | Path, title: str | None = None) -> Path:
    """One line per CSV column against the sweep axis; writes `path`."""
    path = Path(path)
    axis_name = result.header[0]
    x = result.column(axis_name)
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for name in result.header[1:]:
        ax.plot(x, result.column(name), lw=1.6, label=name)
    ax.set_xlabel(axis_name)
    ax.set_ylabel("value")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=7, ncols=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
