"""Exception types raised by the library."""


class HybridSpinError(ValueError):
    """Base class for all library errors."""


class NotHermitianError(HybridSpinError):
    """Input matrix is not Hermitian within tolerance."""


class NoConvergenceError(HybridSpinError):
    """The eigenvalue solver failed to converge."""


class DimensionMismatchError(HybridSpinError):
    """Matrix has the wrong shape for the requested operation."""


class NotDensityMatrixError(HybridSpinError):
    """Matrix is not Hermitian, unit-trace and positive semidefinite."""


class SparsityViolationError(HybridSpinError):
    """State has coherences outside the (2,4)/(3,5) positions."""


class InvalidTemperatureError(HybridSpinError):
    """Temperature must be strictly positive."""


class GammaOutOfRangeError(HybridSpinError):
    """Channel strength must lie in [0, 1]."""


class NegativeTimeError(HybridSpinError):
    """Evolution time must be nonnegative."""


class NegativeRateError(HybridSpinError):
    """Decay rates must be nonnegative."""


class IncompleteKrausSetError(HybridSpinError):
    """Kraus operators do not sum to the identity."""


class PureReducedStateError(HybridSpinError):
    """Qubit marginal is pure; the purification tensor is not invertible."""


class SingularRError(HybridSpinError):
    """Purification correlation tensor is numerically singular."""


class ConfigError(HybridSpinError):
    """Base class for configuration problems."""


class ParseError(ConfigError):
    """Configuration file is not valid JSON."""


class ValidationError(ConfigError):
    """Configuration file is valid JSON but violates the schema."""
