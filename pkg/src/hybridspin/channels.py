"""Local dephasing and phase-flip noise on the qubit and the qutrit.

Each channel is available as an explicit Kraus set (six product operators)
and as a closed-form action on axially sparse states, where it reduces to
multiplying the two coherences by scale factors. The two routes must agree
to machine precision; this is one of the verification suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    GammaOutOfRangeError,
    IncompleteKrausSetError,
    NegativeRateError,
    NegativeTimeError,
)
from .linalg import SYSTEM_DIM, check_axial_sparsity
from .tolerances import ENTRY_ATOL

DEPHASING = "dephasing"
PHASE_FLIP = "phase_flip"
CHANNEL_KINDS = (DEPHASING, PHASE_FLIP)

_I2 = np.eye(2, dtype=complex)
_I3 = np.eye(3, dtype=complex)


@dataclass(frozen=True)
class DecayLaw:
    """Exponential decay gamma(t) = 1 - exp(-t * rate) per subsystem."""

    rate_a: float
    rate_b: float
    time: float

    def __post_init__(self):
        if self.rate_a < 0 or self.rate_b < 0:
            raise NegativeRateError(f"decay rates must be nonnegative, got ({self.rate_a}, {self.rate_b})")
        if self.time < 0:
            raise NegativeTimeError(f"time must be nonnegative, got {self.time}")


def decay(law: DecayLaw) -> tuple[float, float]:
    """Noise strengths (gamma_a, gamma_b) at the law's time; both in [0, 1)."""
    return (-math.expm1(-law.time * law.rate_a), -math.expm1(-law.time * law.rate_b))


@dataclass(frozen=True)
class ChannelConfig:
    """A channel kind plus its two local noise strengths."""

    kind: str
    gamma_a: float
    gamma_b: float

    def __post_init__(self):
        if self.kind not in CHANNEL_KINDS:
            raise GammaOutOfRangeError(f"unknown channel kind {self.kind!r}; expected one of {CHANNEL_KINDS}")
        for name in ("gamma_a", "gamma_b"):
            g = getattr(self, name)
            if not 0.0 <= g <= 1.0:
                raise GammaOutOfRangeError(f"{name} out of [0,1]: {g}")

    @classmethod
    def from_decay(cls, kind: str, law: DecayLaw) -> "ChannelConfig":
        ga, gb = decay(law)
        return cls(kind=kind, gamma_a=ga, gamma_b=gb)


def _qubit_dephasing(gamma: float) -> list[np.ndarray]:
    return [np.diag([1.0, math.sqrt(1.0 - gamma)]).astype(complex),
            np.diag([0.0, math.sqrt(gamma)]).astype(complex)]


def _qutrit_dephasing(gamma: float) -> list[np.ndarray]:
    keep = math.sqrt(1.0 - gamma)
    leak = math.sqrt(gamma)
    return [np.diag([1.0, keep, keep]).astype(complex),
            np.diag([0.0, leak, 0.0]).astype(complex),
            np.diag([0.0, 0.0, leak]).astype(complex)]


def _qubit_phase_flip(gamma: float) -> list[np.ndarray]:
    return [math.sqrt(1.0 - gamma / 2) * _I2,
            math.sqrt(gamma / 2) * np.diag([1.0, -1.0]).astype(complex)]


def _qutrit_phase_flip(gamma: float) -> list[np.ndarray]:
    w = np.exp(2j * np.pi / 3)
    return [math.sqrt(1.0 - 2 * gamma / 3) * _I3,
            math.sqrt(gamma / 3) * np.diag([1.0, w.conjugate(), w]),
            math.sqrt(gamma / 3) * np.diag([1.0, w, w.conjugate()])]


def _product_kraus(qubit_ops, qutrit_ops) -> list[np.ndarray]:
    # Qubit factor first, qutrit factor second; all operators are diagonal
    # products, so the composition order is immaterial.
    return [np.kron(_I2, f) @ np.kron(e, _I3) for e in qubit_ops for f in qutrit_ops]


def dephasing_kraus(cfg: ChannelConfig) -> list[np.ndarray]:
    """The six product Kraus operators of local dephasing on both parts."""
    if cfg.kind != DEPHASING:
        raise ValueError(f"expected a dephasing config, got kind={cfg.kind!r}")
    return _product_kraus(_qubit_dephasing(cfg.gamma_a), _qutrit_dephasing(cfg.gamma_b))


def phase_flip_kraus(cfg: ChannelConfig) -> list[np.ndarray]:
    """The six product Kraus operators of local phase flips on both parts."""
    if cfg.kind != PHASE_FLIP:
        raise ValueError(f"expected a phase_flip config, got kind={cfg.kind!r}")
    return _product_kraus(_qubit_phase_flip(cfg.gamma_a), _qutrit_phase_flip(cfg.gamma_b))


def kraus_set(cfg: ChannelConfig) -> list[np.ndarray]:
    if cfg.kind == DEPHASING:
        return dephasing_kraus(cfg)
    return phase_flip_kraus(cfg)


def completeness_defect(operators: list[np.ndarray]) -> float:
    """Largest entry of |sum_i K_i^dagger K_i - I|."""
    acc = np.zeros((SYSTEM_DIM, SYSTEM_DIM), dtype=complex)
    for op in operators:
        acc += op.conj().T @ op
    return float(np.abs(acc - np.eye(SYSTEM_DIM)).max())


def apply_channel(rho: np.ndarray, operators: list[np.ndarray]) -> np.ndarray:
    """rho -> sum_i K_i rho K_i^dagger for a complete Kraus set."""
    defect = completeness_defect(operators)
    if defect > ENTRY_ATOL:
        raise IncompleteKrausSetError(f"sum K^dagger K deviates from identity by {defect:.3e}")
    out = np.zeros_like(np.asarray(rho, dtype=complex))
    for op in operators:
        out += op @ rho @ op.conj().T
    return out


def coherence_factors(cfg: ChannelConfig) -> tuple[float, float]:
    """Scale factors (on rho_24, on rho_35) applied by the channel.

    Dephasing shrinks the two coherences unequally,
        k = sqrt((1-gamma_a)(1-gamma_b)),  l = (1-gamma_b) sqrt(1-gamma_a),
    while the phase flip multiplies both by (1-gamma_a)(1-gamma_b).
    """
    ka, kb = 1.0 - cfg.gamma_a, 1.0 - cfg.gamma_b
    if cfg.kind == DEPHASING:
        return math.sqrt(ka * kb), kb * math.sqrt(ka)
    k2 = ka * kb
    return k2, k2


def evolved_closed_form(rho: np.ndarray, cfg: ChannelConfig) -> np.ndarray:
    """Channel action on an axially sparse state: diagonal untouched,
    coherences scaled by `coherence_factors`."""
    rho = check_axial_sparsity(rho)
    k24, k35 = coherence_factors(cfg)
    out = np.array(rho, dtype=complex, copy=True)
    out[1, 3] *= k24
    out[3, 1] *= k24
    out[2, 4] *= k35
    out[4, 2] *= k35
    return out
