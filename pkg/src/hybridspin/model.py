"""Ten-parameter axially symmetric qubit-qutrit Hamiltonian.

Basis ordering is |m_s, m_S> with the qubit projection m_s in {+1/2, -1/2}
outermost and the qutrit projection m_S in {+1, 0, -1} innermost:

    1 = |+1/2,+1>  2 = |+1/2,0>  3 = |+1/2,-1>
    4 = |-1/2,+1>  5 = |-1/2,0>  6 = |-1/2,-1>

With this ordering the spin-flip couplings connect exactly the (2,4) and
(3,5) basis pairs, so the Hamiltonian (and every thermal or noise-evolved
state derived from it) is sparse outside those positions. Energy and
temperature share one unit system with k_B = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .errors import NotHermitianError, ValidationError
from .linalg import hermiticity_defect

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class ModelParams:
    """Couplings of the hybrid-spin Hamiltonian (all in energy units).

    b1, b2: z-axis magnetic fields on the qubit and the qutrit.
    j, jz: transverse and longitudinal exchange constants.
    k, k1: uniaxial and planar single-ion anisotropies of the qutrit.
    k2: two-ion uniaxial anisotropy.
    dz: z-component of the antisymmetric (Dzyaloshinsky-Moriya) exchange.
    gamma, lam: symmetric and antisymmetric higher-order spin couplings.
    """

    b1: float = 0.0
    b2: float = 0.0
    j: float = 0.0
    jz: float = 0.0
    k: float = 0.0
    k1: float = 0.0
    k2: float = 0.0
    dz: float = 0.0
    gamma: float = 0.0
    lam: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ValidationError(f"hamiltonian.{_json_name(f.name)}: expected a finite number, got {value!r}")
            object.__setattr__(self, f.name, float(value))

    @classmethod
    def from_dict(cls, data: dict) -> "ModelParams":
        """Build from a JSON mapping with keys b1..dz, gamma and lambda."""
        if not isinstance(data, dict):
            raise ValidationError("hamiltonian: expected an object")
        expected = {_json_name(f.name): f.name for f in fields(cls)}
        unknown = sorted(set(data) - set(expected))
        if unknown:
            raise ValidationError(f"hamiltonian: unknown key(s) {', '.join(unknown)}")
        missing = sorted(set(expected) - set(data))
        if missing:
            raise ValidationError(f"hamiltonian: missing key(s) {', '.join(missing)}")
        return cls(**{attr: data[key] for key, attr in expected.items()})

    def to_dict(self) -> dict:
        return {_json_name(f.name): getattr(self, f.name) for f in fields(self)}


def _json_name(attr: str) -> str:
    return "lambda" if attr == "lam" else attr


@dataclass(frozen=True)
class SpinOperators:
    """Spin-1/2 operators (s_i = sigma_i / 2) and spin-1 operators."""

    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray
    Sx: np.ndarray
    Sy: np.ndarray
    Sz: np.ndarray


def build_spin_operators() -> SpinOperators:
    """Standard spin matrices in the S_z eigenbasis ordered {+1, 0, -1}."""
    sx = np.array([[0, 1], [1, 0]], dtype=complex) / 2
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex) / 2
    sz = np.array([[0.5, 0], [0, -0.5]], dtype=complex)
    Sx = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / _SQRT2
    Sy = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex) / _SQRT2
    Sz = np.array([[1, 0, 0], [0, 0, 0], [0, 0, -1]], dtype=complex)
    return SpinOperators(sx=sx, sy=sy, sz=sz, Sx=Sx, Sy=Sy, Sz=Sz)


def build_hamiltonian(params: ModelParams) -> np.ndarray:
    """Assemble the 6x6 Hamiltonian as a sum of Kronecker products.

    The only nonzero off-diagonal entries sit at the (2,4) and (3,5)
    positions (1-based) and their conjugates.
    """
    ops = build_spin_operators()
    i2 = np.eye(2, dtype=complex)
    i3 = np.eye(3, dtype=complex)
    kron = np.kron
    # Anticommutators {S_x, S_z} and {S_y, S_z} of the qutrit.
    axz = ops.Sx @ ops.Sz + ops.Sz @ ops.Sx
    ayz = ops.Sy @ ops.Sz + ops.Sz @ ops.Sy

    h = params.b1 * kron(ops.sz, i3)
    h += params.b2 * kron(i2, ops.Sz)
    h += params.j * (kron(ops.sx, ops.Sx) + kron(ops.sy, ops.Sy))
    h += params.jz * kron(ops.sz, ops.Sz)
    h += params.k * kron(i2, ops.Sz @ ops.Sz)
    h += params.k1 * kron(i2, ops.Sx @ ops.Sx + ops.Sy @ ops.Sy)
    h += params.k2 * kron(ops.sz, ops.Sz @ ops.Sz)
    h += params.gamma * (kron(ops.sy, ayz) + kron(ops.sx, axz))
    h += params.dz * (kron(ops.sx, ops.Sy) - kron(ops.sy, ops.Sx))
    h += params.lam * (kron(ops.sx, ayz) - kron(ops.sy, axz))

    defect = hermiticity_defect(h)
    if defect > 1e-12:
        raise NotHermitianError(f"Hamiltonian construction produced a non-Hermitian matrix ({defect:.3e})")
    return h


@dataclass(frozen=True)
class HamiltonianSymbols:
    """Closed-form quantities of the block-diagonalized Hamiltonian.

    e1 and e6 are the uncoupled corner energies. The (2,4) coherence block
    is [[h1, g1], [g1*, h3]] and the (3,5) block is [[h2, g2], [g2*, h4]],
    with level splittings r1 and r2. The sign convention for h2/h3 is fixed
    by this pairing: h2 is the diagonal energy of basis state 3 and h3 that
    of basis state 4, which is the unique assignment under which the six
    analytic eigenvalues {e1, e6, (h1+h3)/2 +- r1/2, (h2+h4)/2 +- r2/2}
    reproduce the numerically diagonalized Hamiltonian.
    """

    e1: float
    e6: float
    h1: float
    h2: float
    h3: float
    h4: float
    g1: complex
    g2: complex
    r1: float
    r2: float


def closed_form_symbols(params: ModelParams) -> HamiltonianSymbols:
    """Derived symbols used by the analytic thermal-state expressions."""
    p = params
    zeeman = p.b1 / 2 + p.b2 + p.k2 / 2
    base = p.jz / 2 + p.k + p.k1
    e1 = base + zeeman
    e6 = base - zeeman
    h1 = p.b1 / 2 + 2 * p.k1
    h4 = -p.b1 / 2 + 2 * p.k1
    h2 = p.b1 / 2 - p.b2 - p.jz / 2 + p.k + p.k1 + p.k2 / 2
    h3 = -p.b1 / 2 + p.b2 - p.jz / 2 + p.k + p.k1 - p.k2 / 2
    g1 = (p.j + p.gamma + 1j * (p.dz + p.lam)) / _SQRT2
    g2 = (p.j - p.gamma + 1j * (p.dz - p.lam)) / _SQRT2
    r1 = math.hypot(h1 - h3, 2 * abs(g1))
    r2 = math.hypot(h2 - h4, 2 * abs(g2))
    return HamiltonianSymbols(e1=e1, e6=e6, h1=h1, h2=h2, h3=h3, h4=h4,
                              g1=g1, g2=g2, r1=r1, r2=r2)


def analytic_eigenvalues(params: ModelParams) -> np.ndarray:
    """The six closed-form energy levels, ascending."""
    s = closed_form_symbols(params)
    levels = [s.e1, s.e6,
              (s.h1 + s.h3) / 2 - s.r1 / 2, (s.h1 + s.h3) / 2 + s.r1 / 2,
              (s.h2 + s.h4) / 2 - s.r2 / 2, (s.h2 + s.h4) / 2 + s.r2 / 2]
    return np.sort(np.array(levels))


def total_sz_operator() -> np.ndarray:
    """s_z x I_3 + I_2 x S_z, the conserved total spin projection."""
    ops = build_spin_operators()
    return np.kron(ops.sz, np.eye(3, dtype=complex)) + np.kron(np.eye(2, dtype=complex), ops.Sz)
