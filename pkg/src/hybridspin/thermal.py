"""Thermal equilibrium states exp(-H/T)/Z of the hybrid system.

Two independent routes are provided. `gibbs_closed_form` evaluates the
analytic matrix elements derived from the block structure of the
Hamiltonian; `gibbs_oracle` exponentiates the Hamiltonian numerically.
They must agree entrywise, which is what the verification suite enforces.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidTemperatureError
from .linalg import SYSTEM_DIM, hermitian_eigenvalues, hermitian_exp
from .model import ModelParams, build_hamiltonian, closed_form_symbols
from .tolerances import DEGENERATE_GAP


def _require_temperature(temperature: float) -> float:
    t = float(temperature)
    if not math.isfinite(t) or t <= 0.0:
        raise InvalidTemperatureError(f"temperature must be positive, got {temperature!r}")
    return t


def _block_weights(mid: float, gap: float, shift: float, temperature: float):
    """Boltzmann data for a 2x2 block with levels mid -/+ gap/2.

    All exponentials are taken relative to `shift` (the global minimum
    energy) so that low temperatures cannot overflow. Returns the
    cosh-like weight, the sinh-like weight divided by the gap, and the
    total weight of the block (its contribution to the partition sum).
    """
    w_lo = math.exp(-((mid - gap / 2) - shift) / temperature)
    decay = -math.expm1(-gap / temperature)  # 1 - exp(-gap/T), no cancellation
    cosh_w = w_lo * (2.0 - decay) / 2.0
    if gap < DEGENERATE_GAP:
        # Removable singularity: sinh(g/2T)/g -> 1/(2T) as g -> 0.
        sinh_over_gap = w_lo / (2.0 * temperature)
    else:
        sinh_over_gap = w_lo * decay / (2.0 * gap)
    return cosh_w, sinh_over_gap, 2.0 * cosh_w


def gibbs_closed_form(params: ModelParams, temperature: float) -> np.ndarray:
    """Thermal state from the analytic matrix elements.

    Populates the diagonal and the (2,4)/(3,5) coherences from the
    closed-form expressions; never diagonalizes anything.
    """
    t = _require_temperature(temperature)
    s = closed_form_symbols(params)
    mid1 = (s.h1 + s.h3) / 2
    mid2 = (s.h2 + s.h4) / 2
    shift = min(s.e1, s.e6, mid1 - s.r1 / 2, mid2 - s.r2 / 2)

    w_e1 = math.exp(-(s.e1 - shift) / t)
    w_e6 = math.exp(-(s.e6 - shift) / t)
    cosh1, sr1, z1 = _block_weights(mid1, s.r1, shift, t)
    cosh2, sr2, z2 = _block_weights(mid2, s.r2, shift, t)
    z = w_e1 + w_e6 + z1 + z2

    rho = np.zeros((SYSTEM_DIM, SYSTEM_DIM), dtype=complex)
    rho[0, 0] = w_e1 / z
    rho[5, 5] = w_e6 / z
    rho[1, 1] = (cosh1 + (s.h3 - s.h1) * sr1) / z
    rho[3, 3] = (cosh1 + (s.h1 - s.h3) * sr1) / z
    rho[2, 2] = (cosh2 + (s.h4 - s.h2) * sr2) / z
    rho[4, 4] = (cosh2 + (s.h2 - s.h4) * sr2) / z
    rho[1, 3] = -2.0 * s.g1 * sr1 / z
    rho[3, 1] = rho[1, 3].conjugate()
    rho[2, 4] = -2.0 * s.g2 * sr2 / z
    rho[4, 2] = rho[2, 4].conjugate()
    return rho


def gibbs_oracle(params: ModelParams, temperature: float) -> np.ndarray:
    """Thermal state by numeric matrix exponential, trace-normalized.

    The Hamiltonian spectrum is shifted to its minimum before
    exponentiating; the shift cancels in the normalization.
    """
    t = _require_temperature(temperature)
    h = build_hamiltonian(params)
    ground = hermitian_eigenvalues(h)[0]
    x = hermitian_exp(h - ground * np.eye(SYSTEM_DIM), -1.0 / t)
    return x / np.trace(x).real


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2)."""
    return float(np.trace(rho @ rho).real)
