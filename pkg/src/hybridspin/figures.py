"""Access to the bundled figure sweep specifications.

Eight specs reproduce the reference temperature sweeps: fig1a-fig1d are
negativity under dephasing/phase-flip noise in symmetric (gamma_a =
gamma_b) and asymmetric (gamma_b = 0) configurations; fig2a-fig2d are the
same grids for the linear-entropy discord.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .config import SweepSpec, load_config

FIGURE_NAMES = ("fig1a", "fig1b", "fig1c", "fig1d",
                "fig2a", "fig2b", "fig2c", "fig2d")


def figure_path(name: str) -> Path:
    """Filesystem path of a bundled spec."""
    if name not in FIGURE_NAMES:
        raise KeyError(f"unknown figure {name!r}; available: {', '.join(FIGURE_NAMES)}")
    with resources.as_file(resources.files(__package__) / "figures" / f"{name}.json") as p:
        return Path(p)


def load_figure(name: str) -> SweepSpec:
    """Load and validate a bundled spec."""
    return load_config(figure_path(name))
