"""Self-verification suites: every closed form against its numeric twin.

Each suite draws randomized inputs from a seeded generator, measures the
worst deviation between two independently implemented routes, and passes
iff that deviation stays under its threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channels, correlations, thermal
from .linalg import partial_transpose_qutrit
from .model import ModelParams, build_hamiltonian, total_sz_operator
from .tolerances import ORACLE_ATOL

DEFAULT_SEED = 20250810


@dataclass(frozen=True)
class SuiteReport:
    name: str
    passed: bool
    max_deviation: float
    threshold: float
    cases: int
    detail: str = ""


def random_params(rng: np.random.Generator, scale: float = 2.0) -> ModelParams:
    values = rng.uniform(-scale, scale, size=10)
    return ModelParams(*values)


def random_axial_state(rng: np.random.Generator) -> np.ndarray:
    """Random density matrix with the (2,4)/(3,5) coherence pattern.

    Coherences are capped by sqrt of the population product of their own
    2x2 block, which keeps the matrix positive semidefinite.
    """
    populations = rng.exponential(size=6)
    populations /= populations.sum()
    rho = np.diag(populations).astype(complex)
    for (i, j) in ((1, 3), (2, 4)):
        magnitude = rng.uniform(0.0, 0.98) * np.sqrt(populations[i] * populations[j])
        phase = np.exp(1j * rng.uniform(0.0, 2 * np.pi))
        rho[i, j] = magnitude * phase
        rho[j, i] = rho[i, j].conjugate()
    return rho


def random_channel_config(rng: np.random.Generator) -> channels.ChannelConfig:
    kind = channels.DEPHASING if rng.random() < 0.5 else channels.PHASE_FLIP
    return channels.ChannelConfig(kind=kind, gamma_a=rng.uniform(), gamma_b=rng.uniform())


def suite_gibbs(seed: int = DEFAULT_SEED, cases: int = 500) -> SuiteReport:
    """Closed-form thermal state vs trace-normalized matrix exponential."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(cases):
        params = random_params(rng)
        temperature = rng.uniform(0.05, 10.0)
        deviation = np.abs(thermal.gibbs_closed_form(params, temperature)
                           - thermal.gibbs_oracle(params, temperature)).max()
        worst = max(worst, float(deviation))
    return SuiteReport("gibbs", worst <= ORACLE_ATOL, worst, ORACLE_ATOL, cases,
                       "closed form vs matrix exponential")


def suite_channels(seed: int = DEFAULT_SEED, cases: int = 500) -> SuiteReport:
    """Coherence-factor closed form vs explicit Kraus sums, both kinds."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for kind in channels.CHANNEL_KINDS:
        for _ in range(cases):
            rho = random_axial_state(rng)
            cfg = channels.ChannelConfig(kind=kind, gamma_a=rng.uniform(), gamma_b=rng.uniform())
            evolved = channels.apply_channel(rho, channels.kraus_set(cfg))
            deviation = np.abs(channels.evolved_closed_form(rho, cfg) - evolved).max()
            worst = max(worst, float(deviation))
    return SuiteReport("channels", worst <= 1e-12, worst, 1e-12, 2 * cases,
                       "coherence factors vs Kraus sum")


def suite_negativity(seed: int = DEFAULT_SEED, cases: int = 500) -> SuiteReport:
    """Block closed form vs spectral trace-norm negativity."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(cases):
        rho = random_axial_state(rng)
        deviation = abs(correlations.negativity_closed_form(rho)
                        - correlations.negativity_spectral(rho))
        worst = max(worst, float(deviation))
    return SuiteReport("negativity", worst <= 1e-10, worst, 1e-10, cases,
                       "block closed form vs partial-transpose spectrum")


def suite_discord(seed: int = DEFAULT_SEED, cases: int = 200) -> SuiteReport:
    """Numeric lambda_max(M^T M) vs its two-branch closed form."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(cases):
        rho = random_axial_state(rng)
        breakdown = correlations.discord(rho)
        deviation = abs(breakdown.lambda_max - correlations.lambda_max_closed_form(rho))
        worst = max(worst, float(deviation))
    return SuiteReport("discord", worst <= 1e-8, worst, 1e-8, cases,
                       "numeric lambda_max vs closed form")


def suite_cptp(seed: int = DEFAULT_SEED, cases: int = 200) -> SuiteReport:
    """Trace, Hermiticity and positivity preservation of both channels."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(cases):
        rho = random_axial_state(rng)
        cfg = random_channel_config(rng)
        ops = channels.kraus_set(cfg)
        worst = max(worst, channels.completeness_defect(ops))
        evolved = channels.apply_channel(rho, ops)
        worst = max(worst, abs(float(np.trace(evolved).real) - 1.0))
        worst = max(worst, float(np.abs(evolved - evolved.conj().T).max()))
        smallest = float(np.linalg.eigvalsh(evolved)[0])
        worst = max(worst, max(0.0, -smallest - 1e-10))
        # PT preserves trace and Hermiticity as well
        pt = partial_transpose_qutrit(evolved)
        worst = max(worst, abs(float(np.trace(pt).real) - 1.0))
    return SuiteReport("cptp", worst <= 1e-12, worst, 1e-12, cases,
                       "completeness, trace, Hermiticity, positivity")


def suite_symmetry(seed: int = DEFAULT_SEED, cases: int = 500) -> SuiteReport:
    """[H, s_z + S_z] = 0 for random parameter draws."""
    rng = np.random.default_rng(seed)
    sz_total = total_sz_operator()
    worst = 0.0
    for _ in range(cases):
        h = build_hamiltonian(random_params(rng))
        commutator = h @ sz_total - sz_total @ h
        worst = max(worst, float(np.abs(commutator).max()))
    return SuiteReport("symmetry", worst <= 1e-12, worst, 1e-12, cases,
                       "total-S_z commutator")


_SUITES = {
    "gibbs": suite_gibbs,
    "channels": suite_channels,
    "negativity": suite_negativity,
    "discord": suite_discord,
    "cptp": suite_cptp,
    "symmetry": suite_symmetry,
}


def suite_names() -> tuple[str, ...]:
    return tuple(_SUITES)


def run_suites(names=None, seed: int = DEFAULT_SEED) -> list[SuiteReport]:
    if names is None:
        names = suite_names()
    unknown = [n for n in names if n not in _SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {', '.join(unknown)}; available: {', '.join(_SUITES)}")
    return [_SUITES[name](seed=seed) for name in names]


def format_reports(reports: list[SuiteReport]) -> str:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"[{status}] {r.name:<11} max deviation {r.max_deviation:.3e} "
                     f"(threshold {r.threshold:.0e}, {r.cases} cases) - {r.detail}")
    return "\n".join(lines)
