"""Sweep execution and CSV emission."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .channels import evolved_closed_form
from .config import AXIS_TEMPERATURE, SweepSpec
from .correlations import discord, mutual_information, negativity_closed_form
from .thermal import gibbs_closed_form, purity


class SweepError(RuntimeError):
    """A measure evaluation failed; carries the grid point and curve label."""


@dataclass(frozen=True)
class SweepResult:
    """Header plus one row per grid point, all values full precision."""

    header: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]

    def to_csv_text(self) -> str:
        lines = [",".join(self.header)]
        for row in self.rows:
            lines.append(",".join(format(v, ".17g") for v in row))
        return "\n".join(lines) + "\n"

    def write_csv(self, path: str | Path) -> None:
        Path(path).write_text(self.to_csv_text(), encoding="utf-8")

    def column(self, name: str) -> np.ndarray:
        return np.array([row[self.header.index(name)] for row in self.rows])


def _measure_value(measure: str, rho: np.ndarray, log_base: float) -> float:
    if measure == "negativity":
        return negativity_closed_form(rho)
    if measure == "discord":
        return discord(rho, base=log_base).discord
    if measure == "mutual_information":
        return mutual_information(rho, base=log_base)
    if measure == "purity":
        return purity(rho)
    raise ValueError(f"unknown measure {measure!r}")


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate every (curve, measure) pair on the grid.

    Temperature sweeps rebuild the thermal state at each grid point and
    apply each curve's fixed channel strengths. Time sweeps keep the
    temperature fixed and evolve the strengths along the decay law.
    Output is deterministic: identical specs give identical CSV bytes.
    """
    header = [spec.axis]
    for curve in spec.curves:
        for measure in spec.measures:
            header.append(f"{measure}:{curve.label}")

    temperature_axis = spec.axis == AXIS_TEMPERATURE
    rows = []
    for value in spec.grid():
        temperature = value if temperature_axis else spec.temperature
        thermal = gibbs_closed_form(spec.params, temperature)
        row = [value]
        for curve in spec.curves:
            try:
                cfg = curve.config_at(None if temperature_axis else value)
                rho = evolved_closed_form(thermal, cfg)
                for measure in spec.measures:
                    row.append(_measure_value(measure, rho, spec.log_base))
            except Exception as exc:
                raise SweepError(
                    f"curve {curve.label!r} failed at {spec.axis}={value:g}: {exc}"
                ) from exc
        rows.append(tuple(row))
    return SweepResult(header=tuple(header), rows=tuple(rows))
