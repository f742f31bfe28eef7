"""Numerical tolerances used across the package.

All comparisons are absolute. These defaults are deliberately centralized so
that every module checks the same thing the test suite checks.
"""

# Maximum |m - m^dagger| entry for a matrix to count as Hermitian.
HERMITICITY_ATOL = 1e-10

# Smallest eigenvalue a positive semidefinite matrix may have.
PSD_EIGENVALUE_FLOOR = -1e-10

# Entrywise tolerance for matrix equality.
ENTRY_ATOL = 1e-12

# Agreement required between closed-form expressions and their numerical
# counterparts (matrix exponential, Kraus sums, spectral negativity).
ORACLE_ATOL = 1e-9

# Below this gap the sinh(r/2T)/r ratio is replaced by its analytic limit.
DEGENERATE_GAP = 1e-12

# Eigenvalues below this threshold contribute zero to entropies.
ENTROPY_EIGENVALUE_CUTOFF = 1e-15

# 1 - a^2 below this means the qubit marginal is effectively pure and the
# purification tensor is singular.
PURE_MARGINAL_CUTOFF = 1e-12
