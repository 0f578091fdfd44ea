"""Tomographic probability-vector encoding of finite-level quantum states
and stochasticity-based witnesses of quantum dynamics.

States map to stacked probability vectors over a quorum of weighted
measurement bases; quantum and classical generators then share one simplex
representation, where failure of the Kolmogorov/stochasticity conditions
certifies genuinely quantum evolution.
"""

from .classical import (
    KolmogorovCheck,
    StochasticityCheck,
    evolve_classical,
    generator_from_rates,
    is_kolmogorov,
    is_stochastic,
    pauli_rate_rhs,
)
from .estimators import QuantumnessWitness, TomographicEncoder
from .exceptions import (
    BadPartitionError,
    BadWeightsError,
    BallViolationError,
    BasisNotOrthonormalError,
    ConfigError,
    DimensionMismatchError,
    IncompleteQuorumError,
    NegativeRateError,
    NotHermitianError,
    NumericalGuardError,
    PositivityLostError,
    RankDeficientError,
    SectorSumViolationError,
    StrategyUnavailableError,
    TomowitnessError,
    WrongDimensionError,
    WrongQuorumShapeError,
)
from .lift import (
    CLASSICAL_COMPATIBLE,
    QUANTUM_WITNESSED,
    STRATEGIES,
    BlockStructure,
    SimplexGenerator,
    WitnessReport,
    block_structure,
    consistency_check,
    default_time_grid,
    lift_generator,
    lift_map,
    witness,
)
from .linalg import (
    hermitian_eigensystem,
    least_squares_solve,
    matrix_exponential,
    pseudoinverse,
)
from .presets import EXAMPLE1_COUPLING_NOTE, PRESETS, example1, example2, example3
from .quantum import (
    GkslGenerator,
    apply_gksl,
    bloch_to_density,
    check_density_matrix,
    density_to_bloch,
    diagonal_projection_generator,
    diagonal_projection_map,
    evolve_density,
    liouvillian_matrix,
)
from .tomography import (
    Quorum,
    basis_from_axis,
    completeness_check,
    decode,
    ellipsoid_membership,
    encode,
    in_quantum_subset,
    pauli_quorum,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # linalg
    "hermitian_eigensystem",
    "matrix_exponential",
    "least_squares_solve",
    "pseudoinverse",
    # quantum
    "GkslGenerator",
    "check_density_matrix",
    "bloch_to_density",
    "density_to_bloch",
    "apply_gksl",
    "liouvillian_matrix",
    "evolve_density",
    "diagonal_projection_generator",
    "diagonal_projection_map",
    # tomography
    "Quorum",
    "basis_from_axis",
    "pauli_quorum",
    "encode",
    "decode",
    "completeness_check",
    "in_quantum_subset",
    "ellipsoid_membership",
    # classical
    "StochasticityCheck",
    "KolmogorovCheck",
    "is_stochastic",
    "is_kolmogorov",
    "generator_from_rates",
    "pauli_rate_rhs",
    "evolve_classical",
    # lift
    "STRATEGIES",
    "CLASSICAL_COMPATIBLE",
    "QUANTUM_WITNESSED",
    "SimplexGenerator",
    "BlockStructure",
    "WitnessReport",
    "lift_generator",
    "lift_map",
    "consistency_check",
    "block_structure",
    "default_time_grid",
    "witness",
    # presets
    "example1",
    "example2",
    "example3",
    "PRESETS",
    "EXAMPLE1_COUPLING_NOTE",
    # estimators
    "TomographicEncoder",
    "QuantumnessWitness",
    # exceptions
    "TomowitnessError",
    "DimensionMismatchError",
    "NotHermitianError",
    "RankDeficientError",
    "BallViolationError",
    "WrongDimensionError",
    "BadWeightsError",
    "BasisNotOrthonormalError",
    "IncompleteQuorumError",
    "SectorSumViolationError",
    "WrongQuorumShapeError",
    "NegativeRateError",
    "StrategyUnavailableError",
    "BadPartitionError",
    "NumericalGuardError",
    "PositivityLostError",
    "ConfigError",
]
