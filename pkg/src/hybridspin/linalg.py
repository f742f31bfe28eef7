"""Dense complex linear algebra for the 2x3 hybrid system.

Everything here operates on small (2x2 ... 6x6) numpy arrays. The 6x6 state
space is always indexed as (qubit m) x (qutrit mu) with the qubit index
outermost, i.e. row 3*m + mu.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatchError,
    NoConvergenceError,
    NotDensityMatrixError,
    NotHermitianError,
    SparsityViolationError,
)
from .tolerances import ENTRY_ATOL, HERMITICITY_ATOL, PSD_EIGENVALUE_FLOOR

QUBIT_DIM = 2
QUTRIT_DIM = 3
SYSTEM_DIM = QUBIT_DIM * QUTRIT_DIM

# Index pairs (row < col) where an axially symmetric state may carry
# coherences: |1/2,0><-1/2,+1| and |1/2,-1><-1/2,0|.
AXIAL_COHERENCE_POSITIONS = ((1, 3), (2, 4))


def matrices_close(a: np.ndarray, b: np.ndarray, atol: float = ENTRY_ATOL) -> bool:
    """Entrywise equality within an absolute tolerance."""
    a = np.asarray(a)
    b = np.asarray(b)
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= atol))


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entry of |m - m^dagger|."""
    return float(np.abs(m - m.conj().T).max())


def require_hermitian(m: np.ndarray, atol: float = HERMITICITY_ATOL) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    defect = hermiticity_defect(m)
    if defect > atol:
        raise NotHermitianError(f"matrix is not Hermitian: max |m - m^H| = {defect:.3e}")
    return m


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    m = require_hermitian(m)
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc


def hermitian_eigensystem(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and the unitary of eigenvectors as columns."""
    m = require_hermitian(m)
    try:
        return np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc


def hermitian_exp(m: np.ndarray, scale: float = 1.0) -> np.ndarray:
    """exp(scale * m) for Hermitian m, via eigendecomposition.

    The result is Hermitian and positive definite for any real scale.
    """
    w, v = hermitian_eigensystem(m)
    x = (v * np.exp(scale * w)) @ v.conj().T
    return (x + x.conj().T) / 2


def trace_norm(m: np.ndarray) -> float:
    """Trace norm ||m||_1 of a Hermitian matrix (sum of |eigenvalues|)."""
    return float(np.abs(hermitian_eigenvalues(m)).sum())


def _as_system_matrix(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (SYSTEM_DIM, SYSTEM_DIM):
        raise DimensionMismatchError(f"expected a 6x6 matrix, got shape {rho.shape}")
    return rho


def partial_transpose_qutrit(rho: np.ndarray) -> np.ndarray:
    """Transpose on the qutrit factor: out[(m,mu),(n,nu)] = rho[(m,nu),(n,mu)]."""
    rho = _as_system_matrix(rho)
    arr = rho.reshape(QUBIT_DIM, QUTRIT_DIM, QUBIT_DIM, QUTRIT_DIM)
    return arr.transpose(0, 3, 2, 1).reshape(SYSTEM_DIM, SYSTEM_DIM)


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Reduced state of one subsystem.

    keep="A" traces out the qutrit and returns the 2x2 qubit state;
    keep="B" traces out the qubit and returns the 3x3 qutrit state.
    """
    rho = _as_system_matrix(rho)
    arr = rho.reshape(QUBIT_DIM, QUTRIT_DIM, QUBIT_DIM, QUTRIT_DIM)
    if keep == "A":
        return np.trace(arr, axis1=1, axis2=3)
    if keep == "B":
        return np.trace(arr, axis1=0, axis2=2)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def check_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity. Returns the input."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise NotDensityMatrixError(f"expected a square matrix, got shape {rho.shape}")
    defect = hermiticity_defect(rho)
    if defect > HERMITICITY_ATOL:
        raise NotDensityMatrixError(f"not Hermitian: max |rho - rho^H| = {defect:.3e}")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > HERMITICITY_ATOL:
        raise NotDensityMatrixError(f"trace is {tr!r}, expected 1")
    smallest = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0])
    if smallest < PSD_EIGENVALUE_FLOOR:
        raise NotDensityMatrixError(f"negative eigenvalue {smallest:.3e}")
    return rho


def check_axial_sparsity(rho: np.ndarray, atol: float = ENTRY_ATOL) -> np.ndarray:
    """Require all off-diagonal entries outside (2,4)/(3,5) to vanish."""
    rho = _as_system_matrix(rho)
    mask = np.eye(SYSTEM_DIM, dtype=bool)
    for i, j in AXIAL_COHERENCE_POSITIONS:
        mask[i, j] = mask[j, i] = True
    worst = float(np.abs(rho[~mask]).max())
    if worst > atol:
        raise SparsityViolationError(
            f"coherence of magnitude {worst:.3e} outside the axial pattern"
        )
    return rho
