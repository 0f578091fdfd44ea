"""Exception hierarchy.

Every invariant violation raises a subclass of :class:`TomowitnessError`,
so callers (and the CLI) can distinguish bad input from genuine bugs.
"""


class TomowitnessError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(TomowitnessError):
    """Operands have incompatible shapes."""


class NotHermitianError(TomowitnessError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class RankDeficientError(TomowitnessError):
    """Least-squares system has (numerically) deficient column rank."""


class BallViolationError(TomowitnessError):
    """Bloch vector lies outside the unit ball."""


class WrongDimensionError(TomowitnessError):
    """Operation requires a specific Hilbert-space dimension."""


class BadWeightsError(TomowitnessError):
    """Sector weights are not strictly positive or do not sum to one."""


class BasisNotOrthonormalError(TomowitnessError):
    """Measurement basis vectors are not orthonormal within tolerance."""


class IncompleteQuorumError(TomowitnessError):
    """Quorum frame map has rank below the full state-space dimension."""


class SectorSumViolationError(TomowitnessError):
    """Tomographic vector sector sums deviate from the quorum weights."""


class WrongQuorumShapeError(TomowitnessError):
    """Operation expects the qubit Pauli quorum layout."""


class NegativeRateError(TomowitnessError):
    """Off-diagonal transition rate is negative."""


class StrategyUnavailableError(TomowitnessError):
    """Requested lift strategy is not defined for this quorum."""


class BadPartitionError(TomowitnessError):
    """Block partition does not sum to the matrix dimension."""


class NumericalGuardError(TomowitnessError):
    """A post-condition that holds mathematically failed numerically."""


class PositivityLostError(NumericalGuardError):
    """Evolved state lost positivity beyond the tolerated error budget."""


class ConfigError(TomowitnessError):
    """Configuration file is malformed; message carries the field path."""
