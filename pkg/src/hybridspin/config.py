"""JSON configuration schema and validation for sweeps and state dumps.

The file layout is:

    {
      "hamiltonian": {"b1": .., "b2": .., "j": .., "jz": .., "k": ..,
                      "k1": .., "k2": .., "dz": .., "gamma": .., "lambda": ..},
      "sweep": {
        "axis": "temperature" | "time",
        "grid": {"start": .., "stop": .., "points": 100},
        "curves": [{"kind": "dephasing", "gamma_a": .., "gamma_b": ..,
                    "label": "optional"},
                   {"kind": "phase_flip", "rate_a": .., "rate_b": ..}],
        "measures": ["negativity", "discord", "mutual_information", "purity"]
      },
      "temperature": ..,            # required for time-axis sweeps / `state`
      "channel": {...},             # optional; used by `state`
      "log_base": "natural" | "two" # default "natural"
    }

Temperature-axis curves carry (gamma_a, gamma_b) directly; time-axis curves
carry (rate_a, rate_b) and the noise strengths follow the exponential decay
law along the grid. Unknown keys are rejected everywhere.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .channels import CHANNEL_KINDS, ChannelConfig, DecayLaw
from .errors import ParseError, ValidationError
from .model import ModelParams

AXIS_TEMPERATURE = "temperature"
AXIS_TIME = "time"

MEASURES = ("negativity", "discord", "mutual_information", "purity")

DEFAULT_POINTS = 100
MIN_TEMPERATURE = 0.01

_LOG_BASES = {"natural": math.e, "two": 2.0}


@dataclass(frozen=True)
class SweepCurve:
    """One channel curve of a sweep; exactly one CSV column per measure."""

    label: str
    kind: str
    gamma_a: float | None = None
    gamma_b: float | None = None
    rate_a: float | None = None
    rate_b: float | None = None

    def config_at(self, time: float | None = None) -> ChannelConfig:
        """Channel strengths at a grid point (time is None on a T axis)."""
        if self.gamma_a is not None:
            return ChannelConfig(kind=self.kind, gamma_a=self.gamma_a, gamma_b=self.gamma_b)
        return ChannelConfig.from_decay(self.kind, DecayLaw(self.rate_a, self.rate_b, time))


@dataclass(frozen=True)
class SweepSpec:
    """Fully validated description of one sweep."""

    params: ModelParams
    axis: str
    start: float
    stop: float
    points: int
    curves: tuple[SweepCurve, ...]
    measures: tuple[str, ...]
    log_base: float = math.e
    temperature: float | None = None

    def grid(self) -> list[float]:
        step = (self.stop - self.start) / (self.points - 1)
        return [self.start + i * step for i in range(self.points)]


def _require_keys(obj: dict, where: str, required: tuple, optional: tuple = ()):
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object")
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise ValidationError(f"{where}: unknown key(s) {', '.join(unknown)}")
    missing = sorted(set(required) - set(obj))
    if missing:
        raise ValidationError(f"{where}: missing key(s) {', '.join(missing)}")


def _number(obj: dict, where: str, key: str) -> float:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ValidationError(f"{where}.{key}: expected a finite number, got {value!r}")
    return float(value)


def _parse_curve(obj: dict, where: str, axis: str) -> SweepCurve:
    gamma_form = "gamma_a" in obj or "gamma_b" in obj
    rate_form = "rate_a" in obj or "rate_b" in obj
    if gamma_form and rate_form:
        raise ValidationError(f"{where}: mixes gamma_* and rate_* keys")
    if axis == AXIS_TEMPERATURE and not gamma_form:
        raise ValidationError(f"{where}: temperature-axis curves need gamma_a and gamma_b")
    if axis == AXIS_TIME and not rate_form:
        raise ValidationError(f"{where}: time-axis curves need rate_a and rate_b")

    pair = ("gamma_a", "gamma_b") if gamma_form else ("rate_a", "rate_b")
    _require_keys(obj, where, ("kind",) + pair, optional=("label",))
    kind = obj["kind"]
    if kind not in CHANNEL_KINDS:
        raise ValidationError(f"{where}.kind: expected one of {CHANNEL_KINDS}, got {kind!r}")
    a = _number(obj, where, pair[0])
    b = _number(obj, where, pair[1])
    if gamma_form:
        for name, value in zip(pair, (a, b)):
            if not 0.0 <= value <= 1.0:
                raise ValidationError(f"{where}.{name}: {name} out of [0,1]: {value}")
    else:
        for name, value in zip(pair, (a, b)):
            if value < 0:
                raise ValidationError(f"{where}.{name}: must be nonnegative, got {value}")

    label = obj.get("label")
    if label is None:
        tag = "g" if gamma_form else "r"
        label = f"{kind}_{tag}a{a:g}_{tag}b{b:g}"
    elif not isinstance(label, str) or not label:
        raise ValidationError(f"{where}.label: expected a nonempty string")
    if gamma_form:
        return SweepCurve(label=label, kind=kind, gamma_a=a, gamma_b=b)
    return SweepCurve(label=label, kind=kind, rate_a=a, rate_b=b)


def parse_config(data: dict) -> SweepSpec:
    """Validate a decoded JSON document into a SweepSpec."""
    _require_keys(data, "config", ("hamiltonian", "sweep"),
                  optional=("temperature", "channel", "log_base"))
    params = ModelParams.from_dict(data["hamiltonian"])

    log_base_name = data.get("log_base", "natural")
    if log_base_name not in _LOG_BASES:
        raise ValidationError(f"log_base: expected 'natural' or 'two', got {log_base_name!r}")

    sweep = data["sweep"]
    _require_keys(sweep, "sweep", ("axis", "grid", "curves", "measures"))
    axis = sweep["axis"]
    if axis not in (AXIS_TEMPERATURE, AXIS_TIME):
        raise ValidationError(f"sweep.axis: expected 'temperature' or 'time', got {axis!r}")

    grid = sweep["grid"]
    _require_keys(grid, "sweep.grid", ("start", "stop"), optional=("points",))
    start = _number(grid, "sweep.grid", "start")
    stop = _number(grid, "sweep.grid", "stop")
    points = grid.get("points", DEFAULT_POINTS)
    if isinstance(points, bool) or not isinstance(points, int):
        raise ValidationError(f"sweep.grid.points: expected an integer, got {points!r}")
    if points < 2:
        raise ValidationError(f"sweep.grid.points: need at least 2 points, got {points}")
    if start >= stop:
        raise ValidationError(f"sweep.grid: start must be below stop, got [{start}, {stop}]")
    if axis == AXIS_TEMPERATURE and start < MIN_TEMPERATURE:
        raise ValidationError(f"sweep.grid.start: temperature grids need start >= {MIN_TEMPERATURE}")
    if axis == AXIS_TIME and start < 0:
        raise ValidationError("sweep.grid.start: time grids need start >= 0")

    curves_raw = sweep["curves"]
    if not isinstance(curves_raw, list) or not curves_raw:
        raise ValidationError("sweep.curves: expected a nonempty list")
    curves = tuple(_parse_curve(c, f"sweep.curves[{i}]", axis)
                   for i, c in enumerate(curves_raw))
    labels = [c.label for c in curves]
    if len(set(labels)) != len(labels):
        raise ValidationError("sweep.curves: duplicate curve labels")

    measures_raw = sweep["measures"]
    if not isinstance(measures_raw, list) or not measures_raw:
        raise ValidationError("sweep.measures: expected a nonempty list")
    for m in measures_raw:
        if m not in MEASURES:
            raise ValidationError(f"sweep.measures: unknown measure {m!r}; expected subset of {MEASURES}")
    measures = tuple(dict.fromkeys(measures_raw))

    temperature = None
    if "temperature" in data:
        temperature = _number(data, "config", "temperature")
        if temperature <= 0:
            raise ValidationError(f"temperature: must be positive, got {temperature}")
    if axis == AXIS_TIME and temperature is None:
        raise ValidationError("temperature: required for time-axis sweeps")

    return SweepSpec(params=params, axis=axis, start=start, stop=stop, points=points,
                     curves=curves, measures=measures,
                     log_base=_LOG_BASES[log_base_name], temperature=temperature)


def parse_state_config(data: dict) -> tuple[ModelParams, float, ChannelConfig | None]:
    """Validate the subset of the config used by the `state` command."""
    if not isinstance(data, dict):
        raise ValidationError("config: expected an object")
    if "hamiltonian" not in data:
        raise ValidationError("config: missing key(s) hamiltonian")
    params = ModelParams.from_dict(data["hamiltonian"])
    if "temperature" not in data:
        raise ValidationError("config: missing key(s) temperature")
    temperature = _number(data, "config", "temperature")
    if temperature <= 0:
        raise ValidationError(f"temperature: must be positive, got {temperature}")
    channel = None
    if "channel" in data:
        obj = data["channel"]
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValidationError("channel: expected an object with a 'kind' key")
        if "rate_a" in obj or "rate_b" in obj or "time" in obj:
            _require_keys(obj, "channel", ("kind", "rate_a", "rate_b", "time"))
            law = DecayLaw(_number(obj, "channel", "rate_a"),
                           _number(obj, "channel", "rate_b"),
                           _number(obj, "channel", "time"))
            if obj["kind"] not in CHANNEL_KINDS:
                raise ValidationError(f"channel.kind: expected one of {CHANNEL_KINDS}, got {obj['kind']!r}")
            channel = ChannelConfig.from_decay(obj["kind"], law)
        else:
            _require_keys(obj, "channel", ("kind", "gamma_a", "gamma_b"))
            if obj["kind"] not in CHANNEL_KINDS:
                raise ValidationError(f"channel.kind: expected one of {CHANNEL_KINDS}, got {obj['kind']!r}")
            ga = _number(obj, "channel", "gamma_a")
            gb = _number(obj, "channel", "gamma_b")
            for name, value in (("gamma_a", ga), ("gamma_b", gb)):
                if not 0.0 <= value <= 1.0:
                    raise ValidationError(f"channel.{name}: {name} out of [0,1]: {value}")
            channel = ChannelConfig(kind=obj["kind"], gamma_a=ga, gamma_b=gb)
    return params, temperature, channel


def load_json(path: str | Path) -> dict:
    """Read and decode a UTF-8 JSON file, reporting line/column on failure."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def load_config(path: str | Path) -> SweepSpec:
    """Load and validate a sweep configuration file."""
    return parse_config(load_json(path))
