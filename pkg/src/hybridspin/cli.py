"""Command-line interface.

    hybridspin sweep  --config cfg.json --out sweep.csv [--plot sweep.png]
    hybridspin state  --config cfg.json
    hybridspin verify [--suite NAME] [--seed N]

Exit codes: 0 on success, 1 on usage or configuration errors, 2 when a
verification suite fails.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import verify as verify_mod
from .channels import evolved_closed_form
from .config import load_config, load_json, parse_state_config
from .errors import ConfigError, HybridSpinError
from .sweep import run_sweep
from .thermal import gibbs_closed_form


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hybridspin",
        description="Thermal states, noise channels and quantum correlations "
                    "of an axially symmetric qubit-qutrit system.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run a sweep and write CSV (and optionally a plot)")
    p_sweep.add_argument("--config", required=True, help="JSON sweep configuration")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.add_argument("--plot", help="also render the sweep to this image file")

    p_state = sub.add_parser("state", help="print the thermal (or noise-evolved) 6x6 state")
    p_state.add_argument("--config", required=True, help="JSON configuration")

    p_verify = sub.add_parser("verify", help="run the oracle cross-check suites")
    p_verify.add_argument("--suite", choices=verify_mod.suite_names(),
                          help="run a single suite instead of all")
    p_verify.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED,
                          help="random seed (default %(default)s)")
    return parser


def _cmd_sweep(args) -> int:
    spec = load_config(args.config)
    result = run_sweep(spec)
    result.write_csv(args.out)
    print(f"wrote {args.out} ({len(result.rows)} rows, {len(result.header) - 1} columns)")
    if args.plot:
        from .plotting import render_sweep_plot

        render_sweep_plot(result, args.plot)
        print(f"wrote {args.plot}")
    return 0


def _format_state(rho: np.ndarray) -> str:
    lines = []
    for row in rho:
        cells = [f"({v.real:+.10f} {v.imag:+.10f}j)" for v in row]
        lines.append("  ".join(cells))
    return "\n".join(lines)


def _cmd_state(args) -> int:
    params, temperature, channel = parse_state_config(load_json(args.config))
    rho = gibbs_closed_form(params, temperature)
    if channel is not None:
        rho = evolved_closed_form(rho, channel)
        print(f"# state at T={temperature:g} after {channel.kind} "
              f"(gamma_a={channel.gamma_a:g}, gamma_b={channel.gamma_b:g})")
    else:
        print(f"# thermal state at T={temperature:g}")
    print(_format_state(rho))
    return 0


def _cmd_verify(args) -> int:
    names = [args.suite] if args.suite else None
    reports = verify_mod.run_suites(names, seed=args.seed)
    print(verify_mod.format_reports(reports))
    return 0 if all(r.passed for r in reports) else 2


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "state":
            return _cmd_state(args)
        return _cmd_verify(args)
    except (ConfigError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except HybridSpinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
