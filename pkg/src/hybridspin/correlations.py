"""Correlation measures: negativity, entropies, and linear-entropy discord.

Negativity comes in two independent flavors (spectral via the partial
transpose, and closed-form via the two 2x2 blocks of the partially
transposed axially sparse state). The discord pipeline follows the
channel-matrix construction: purify the qubit marginal, invert its
two-qubit correlation tensor against the full qubit-qutrit tensor, and
read the classical correlations off the largest eigenvalue of M^T M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PureReducedStateError, SingularRError
from .linalg import (
    check_axial_sparsity,
    check_density_matrix,
    partial_trace,
    partial_transpose_qutrit,
    trace_norm,
)
from .tolerances import (
    ENTROPY_EIGENVALUE_CUTOFF,
    HERMITICITY_ATOL,
    PURE_MARGINAL_CUTOFF,
)

_SQRT3 = math.sqrt(3.0)

#: Qubit operator basis {I, sigma_x, sigma_y, sigma_z}.
PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

#: Qutrit operator basis {I} + the eight standard Gell-Mann matrices,
#: normalized as Tr(g_a g_b) = 2 delta_ab for a, b >= 1.
GELL_MANN = (
    np.eye(3, dtype=complex),
    np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
    np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
    np.diag([1.0, 1.0, -2.0]).astype(complex) / _SQRT3,
)


# ---------------------------------------------------------------------------
# Negativity
# ---------------------------------------------------------------------------

def negativity_spectral(rho: np.ndarray) -> float:
    """||rho^{T_B}||_1 - 1, clamped at zero.

    Equals twice the magnitude of the summed negative eigenvalues of the
    partial transpose.
    """
    n = trace_norm(partial_transpose_qutrit(rho)) - 1.0
    return max(n, 0.0)


def negativity_closed_form(rho: np.ndarray) -> float:
    """Negativity of an axially sparse state from its two coherence blocks.

    The partial transpose moves the (2,4) coherence into a block with the
    populations (rho_11, rho_55) and the (3,5) coherence into a block with
    (rho_22, rho_66); only the smaller eigenvalue of each block can go
    negative. Coherence scale factors from any channel are assumed to be
    already folded into the state.
    """
    rho = check_axial_sparsity(rho)
    d = np.diag(rho).real

    def smaller_eigenvalue(pop_a: float, pop_b: float, coherence: complex) -> float:
        return (pop_a + pop_b - math.hypot(pop_a - pop_b, 2 * abs(coherence))) / 2

    lam2 = smaller_eigenvalue(d[0], d[4], rho[1, 3])
    lam4 = smaller_eigenvalue(d[1], d[5], rho[2, 4])
    return 2.0 * (max(0.0, -lam2) + max(0.0, -lam4))


# ---------------------------------------------------------------------------
# Entropies and mutual information
# ---------------------------------------------------------------------------

def von_neumann_entropy(rho: np.ndarray, base: float = math.e) -> float:
    """-sum_i lambda_i log lambda_i; eigenvalues below cutoff contribute 0."""
    rho = check_density_matrix(rho)
    w = np.linalg.eigvalsh(rho)
    w = w[w > ENTROPY_EIGENVALUE_CUTOFF]
    return float(-(w * np.log(w)).sum() / math.log(base))


def mutual_information(rho: np.ndarray, base: float = math.e) -> float:
    """S(rho_A) + S(rho_B) - S(rho_AB)."""
    return (von_neumann_entropy(partial_trace(rho, "A"), base)
            + von_neumann_entropy(partial_trace(rho, "B"), base)
            - von_neumann_entropy(rho, base))


def linear_entropy_qubit(rho_a: np.ndarray) -> float:
    """2(1 - Tr rho^2) for a qubit state; equals 1 - |Bloch vector|^2."""
    rho_a = check_density_matrix(rho_a)
    return float(2.0 * (1.0 - np.trace(rho_a @ rho_a).real))


# ---------------------------------------------------------------------------
# Correlation tensors
# ---------------------------------------------------------------------------

def fano_bloch(rho: np.ndarray) -> np.ndarray:
    """4x9 correlation tensor R[a, b] = Tr(rho sigma^a x g^b).

    R[0, 0] = 1 for a unit-trace state. The qubit marginal is
    (I + sum_a R[a,0] sigma^a) / 2; the qutrit marginal is
    I/3 + sum_b R[0,b] g^b / 2.
    """
    tensor = np.zeros((4, 9))
    for a, sigma in enumerate(PAULI):
        for b, gm in enumerate(GELL_MANN):
            tensor[a, b] = np.trace(rho @ np.kron(sigma, gm)).real
    return tensor


def tensor_to_state(tensor: np.ndarray) -> np.ndarray:
    """Exact inverse of `fano_bloch`.

    Each basis element enters with weight 1 / (||sigma^a||^2 ||g^b||^2),
    i.e. 1/6 on the qutrit-identity column and 1/4 on the Gell-Mann
    columns.
    """
    rho = np.zeros((6, 6), dtype=complex)
    for a, sigma in enumerate(PAULI):
        for b, gm in enumerate(GELL_MANN):
            norm = 2.0 * (3.0 if b == 0 else 2.0)
            rho += tensor[a, b] / norm * np.kron(sigma, gm)
    return rho


@dataclass(frozen=True)
class PurificationData:
    """Symmetric two-qubit purification of a diagonal qubit marginal.

    bloch_z is the marginal's Bloch z-component a; state4 is the pure
    state sqrt((1+a)/2)|00> + sqrt((1-a)/2)|11> as a density matrix, and
    r is its 4x4 correlation tensor Tr(state4 sigma^a x sigma^b).
    """

    bloch_z: float
    r: np.ndarray
    state4: np.ndarray


def purify(rho_a: np.ndarray) -> PurificationData:
    """Purify a diagonal 2x2 marginal against an ancilla qubit.

    Raises PureReducedStateError when the marginal is (numerically) pure,
    in which case the r tensor would be singular.
    """
    rho_a = check_density_matrix(rho_a)
    off = abs(rho_a[0, 1])
    if off > HERMITICITY_ATOL:
        raise ValueError(f"qubit marginal must be diagonal, got |rho_01| = {off:.3e}")
    a = float(rho_a[0, 0].real - rho_a[1, 1].real)
    if 1.0 - a * a < PURE_MARGINAL_CUTOFF:
        raise PureReducedStateError(f"qubit marginal is pure (bloch_z = {a:+.6f})")
    amp0 = math.sqrt((1.0 + a) / 2.0)
    amp1 = math.sqrt((1.0 - a) / 2.0)
    vec = np.array([amp0, 0.0, 0.0, amp1], dtype=complex)
    state4 = np.outer(vec, vec.conj())
    r = np.zeros((4, 4))
    for al, sa in enumerate(PAULI):
        for be, sb in enumerate(PAULI):
            r[al, be] = np.trace(state4 @ np.kron(sa, sb)).real
    return PurificationData(bloch_z=a, r=r, state4=state4)


def channel_matrix(rho: np.ndarray) -> np.ndarray:
    """4x9 matrix M = (2/3) r^{-1} R of the marginal-to-qutrit channel.

    Rows follow the Pauli basis, columns the Gell-Mann basis; the physical
    block is M[1:, 1:]. For a product state the physical block vanishes.
    """
    tensor = fano_bloch(rho)
    purification = purify(partial_trace(rho, "A"))
    try:
        return (2.0 / 3.0) * np.linalg.solve(purification.r, tensor)
    except np.linalg.LinAlgError as exc:
        raise SingularRError(f"purification tensor is singular: {exc}") from exc


def lambda_max_closed_form(rho: np.ndarray) -> float:
    """Largest eigenvalue of M^T M for an axially sparse state, in closed form.

    M^T M has two eigenvalue branches: an equatorial one fed by the two
    coherences (a qubit measurement along x or y) and a polar one fed by
    the population imbalances (a measurement along z),

        lam_eq    = 16 (|rho_24|^2 + |rho_35|^2) / (9 (1 - a^2)),
        lam_polar = 4 [(R33 - a R03)^2 + (R38 - a R08)^2] / (9 (1 - a^2)^2),

    with a the qubit Bloch z-component and R the direct-trace tensor. The
    maximum of the two is the closed-form counterpart of the numeric
    eigenvalue computed through `channel_matrix`.
    """
    rho = check_axial_sparsity(rho)
    d = np.diag(rho).real
    a = d[0] + d[1] + d[2] - d[3] - d[4] - d[5]
    s2 = 1.0 - a * a
    if s2 < PURE_MARGINAL_CUTOFF:
        raise PureReducedStateError(f"qubit marginal is pure (bloch_z = {a:+.6f})")
    r03 = d[0] - d[1] + d[3] - d[4]
    r08 = (d[0] + d[1] - 2 * d[2] + d[3] + d[4] - 2 * d[5]) / _SQRT3
    r33 = d[0] - d[1] - d[3] + d[4]
    r38 = (d[0] + d[1] - 2 * d[2] - d[3] - d[4] + 2 * d[5]) / _SQRT3
    lam_eq = 16.0 * (abs(rho[1, 3]) ** 2 + abs(rho[2, 4]) ** 2) / (9.0 * s2)
    lam_polar = 4.0 * ((r33 - a * r03) ** 2 + (r38 - a * r08) ** 2) / (9.0 * s2 * s2)
    return max(lam_eq, lam_polar)


# ---------------------------------------------------------------------------
# Discord
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscordBreakdown:
    """Mutual information, classical correlations, and their difference."""

    mutual_information: float
    classical_j2: float
    discord: float
    lambda_max: float


def discord(rho: np.ndarray, base: float = math.e) -> DiscordBreakdown:
    """Linear-entropy quantum discord Q = I - J2.

    J2 = (9/4) lambda_max(M^T M) S2(rho_A) is the classical correlation
    extractable by a projective qubit measurement, scored with the linear
    entropy of the conditional states. A pure qubit marginal means the
    state is product within this family, so the discord is defined as 0.
    """
    info = mutual_information(rho, base)
    rho_a = partial_trace(rho, "A")
    try:
        m = channel_matrix(rho)
    except PureReducedStateError:
        return DiscordBreakdown(mutual_information=info, classical_j2=info,
                                discord=0.0, lambda_max=0.0)
    block = m[1:, 1:]
    eigenvalues = np.linalg.eigvalsh(block.T @ block)
    lam = float(eigenvalues[-1])
    j2 = 2.25 * lam * linear_entropy_qubit(rho_a)
    return DiscordBreakdown(mutual_information=info, classical_j2=j2,
                            discord=info - j2, lambda_max=lam)
