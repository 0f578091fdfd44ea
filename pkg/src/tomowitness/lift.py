"""Lifting generators to the probability simplex and witnessing quantumness.

The induced dynamics of an encoded state is only pinned down on the
(N^2-1)-dimensional physical affine subspace, so extending it to a matrix
on the whole stacked space is a choice:

* ``pseudoinverse``: E L E^+ with E the frame map; canonical, any complete
  quorum, annihilates the orthogonal complement of the physical subspace.
* ``sector-local``: qubit Pauli quorum only; resolves the trace from each
  sector's own sum and each Bloch component from its dedicated sector.
  This is the extension that yields the familiar closed-form 6x6 matrices.

Both agree on encoded states; they can differ off the physical subspace,
which is why the witness report names its strategy and flags disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .classical import is_kolmogorov, is_stochastic
from .exceptions import (
    BadPartitionError,
    IncompleteQuorumError,
    NumericalGuardError,
    StrategyUnavailableError,
)
from .quantum import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    GkslGenerator,
    _apply_generator,
    apply_propagator,
    liouvillian_matrix,
)
from .tomography import Quorum, encode_hermitian, frame_matrix, is_pauli_quorum
from .validation import as_square_real

__all__ = [
    "STRATEGIES",
    "SimplexGenerator",
    "BlockStructure",
    "WitnessReport",
    "lift_generator",
    "lift_map",
    "consistency_check",
    "block_structure",
    "default_time_grid",
    "witness",
    "CLASSICAL_COMPATIBLE",
    "QUANTUM_WITNESSED",
]

STRATEGIES = ("pseudoinverse", "sector-local")

CLASSICAL_COMPATIBLE = "classical-compatible"
QUANTUM_WITNESSED = "quantum-witnessed"


@dataclass(frozen=True)
class SimplexGenerator:
    """Real generator of d P/dt = matrix @ P for encoded states."""

    matrix: np.ndarray
    dim: int
    n_sectors: int
    strategy: str

    @property
    def size(self) -> int:
        return self.dim * self.n_sectors

    @property
    def partition(self) -> list[int]:
        return [self.dim] * self.n_sectors

    def norm1(self) -> float:
        return float(np.max(np.sum(np.abs(self.matrix), axis=0)))


def _hermitian_action_matrix(gen: GkslGenerator) -> np.ndarray:
    """Generator as a real matrix on hvec coordinates."""
    dim = gen.dim
    columns = [
        linalg.hvec(_apply_generator(gen, element))
        for element in linalg.hermitian_basis(dim)
    ]
    return np.column_stack(columns)


def _lift_pseudoinverse(gen: GkslGenerator, quorum: Quorum) -> np.ndarray:
    e = frame_matrix(quorum)
    try:
        e_pinv = linalg.pseudoinverse(e)
    except Exception as exc:
        raise IncompleteQuorumError(f"quorum frame map is rank deficient: {exc}") from exc
    return e @ _hermitian_action_matrix(gen) @ e_pinv


def _lift_sector_local(gen: GkslGenerator, quorum: Quorum) -> np.ndarray:
    if not is_pauli_quorum(quorum):
        raise StrategyUnavailableError(
            "sector-local lift is defined only for the qubit Pauli quorum"
        )
    paulis = (PAULI_X, PAULI_Y, PAULI_Z)
    drift = np.array([
        np.real(np.trace(sigma @ _apply_generator(gen, 0.5 * np.eye(2, dtype=complex))))
        for sigma in paulis
    ])
    bloch_rates = np.array([
        [0.5 * np.real(np.trace(sa @ _apply_generator(gen, sb))) for sb in paulis]
        for sa in paulis
    ])
    w = quorum.weights
    m = np.zeros((6, 6))
    for a in range(3):
        for g in range(3):
            coupling = 0.5 * (w[a] / w[g]) * bloch_rates[a, g]
            shift = 0.5 * drift[a] if g == a else 0.0
            m[2 * a, 2 * g] = coupling + shift
            m[2 * a, 2 * g + 1] = -coupling + shift
        m[2 * a + 1, :] = -m[2 * a, :]
    return m


def lift_generator(gen: GkslGenerator, quorum: Quorum,
                   strategy: str = "pseudoinverse") -> SimplexGenerator:
    """Simplex generator reproducing the encoded dynamics.

    Guards two identities before returning: the lifted matrix commutes with
    the encode map (M E = E L on Hermitian coordinates) and conserves every
    sector sum (the weights are constants of motion).
    """
    if strategy not in STRATEGIES:
        raise StrategyUnavailableError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if quorum.dim != gen.dim:
        raise IncompleteQuorumError(
            f"quorum dimension {quorum.dim} != generator dimension {gen.dim}"
        )
    if strategy == "pseudoinverse":
        matrix = _lift_pseudoinverse(gen, quorum)
    else:
        matrix = _lift_sector_local(gen, quorum)

    e = frame_matrix(quorum)
    action = _hermitian_action_matrix(gen)
    scale = max(1.0, float(np.max(np.abs(matrix))), float(np.max(np.abs(action))))
    commute_defect = float(np.max(np.abs(matrix @ e - e @ action)))
    if commute_defect > 1e-9 * scale:
        raise NumericalGuardError(
            f"lifted generator disagrees with encoded dynamics by {commute_defect:.3e}"
        )
    sector_sums = matrix.reshape(quorum.n_sectors, quorum.dim, quorum.size).sum(axis=1)
    sum_defect = float(np.max(np.abs(sector_sums @ e)))
    if sum_defect > 1e-10 * scale:
        raise NumericalGuardError(
            f"lifted generator does not conserve sector sums: defect {sum_defect:.3e}"
        )
    return SimplexGenerator(matrix=matrix, dim=quorum.dim,
                            n_sectors=quorum.n_sectors, strategy=strategy)


def lift_map(generator: SimplexGenerator, t: float) -> np.ndarray:
    """e^{t M} for the lifted generator."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return linalg.matrix_exponential(generator.matrix, t)


def consistency_check(gen: GkslGenerator, quorum: Quorum, strategy: str,
                      states, grid) -> float:
    """Max deviation of encode(evolve(rho, t)) from lift_map(t) @ encode(rho).

    Independent of the lift internals on one side: the left path goes
    through the exact Liouvillian propagator.
    """
    generator = lift_generator(gen, quorum, strategy)
    liouville = liouvillian_matrix(gen)
    worst = 0.0
    for t in grid:
        prop = linalg.matrix_exponential(liouville, float(t))
        transfer = lift_map(generator, float(t))
        for rho in states:
            rho = np.asarray(rho, dtype=complex)
            lhs = encode_hermitian(apply_propagator(prop, rho), quorum)
            rhs = transfer @ encode_hermitian(rho, quorum)
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


@dataclass(frozen=True)
class BlockStructure:
    is_block_diagonal: bool
    off_block_mass: float
    blocks: tuple[np.ndarray, ...]


def block_structure(matrix, partition, tol: float = 1e-9) -> BlockStructure:
    """Split a matrix along a partition of its index range.

    ``off_block_mass`` is the largest magnitude outside the diagonal blocks;
    the returned blocks are the diagonal ones (a faithful decomposition of
    the matrix only when ``is_block_diagonal``).
    """
    matrix = as_square_real(matrix, "matrix")
    sizes = [int(s) for s in partition]
    if any(s <= 0 for s in sizes) or sum(sizes) != matrix.shape[0]:
        raise BadPartitionError(
            f"partition {sizes} does not tile a {matrix.shape[0]}-dimensional matrix"
        )
    edges = np.concatenate([[0], np.cumsum(sizes)])
    mask = np.ones_like(matrix, dtype=bool)
    blocks = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        mask[lo:hi, lo:hi] = False
        blocks.append(matrix[lo:hi, lo:hi].copy())
    off_mass = float(np.max(np.abs(matrix[mask]))) if np.any(mask) else 0.0
    return BlockStructure(
        is_block_diagonal=off_mass <= tol,
        off_block_mass=off_mass,
        blocks=tuple(blocks),
    )


def default_time_grid(generator: SimplexGenerator, n_points: int = 12) -> np.ndarray:
    """t = 0 plus n_points log-spaced between 1e-3 and 1e1, scaled by 1/||M||_1."""
    norm = generator.norm1()
    scale = 1.0 / norm if norm > 0 else 1.0
    return np.concatenate([[0.0], np.logspace(-3.0, 1.0, n_points) * scale])


def _check_grid(grid: np.ndarray, norm: float) -> np.ndarray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("time grid must be a nonempty 1-D array")
    if np.min(grid) < 0:
        raise ValueError("time grid entries must be nonnegative")
    if norm > 0:
        positive = grid[grid > 0]
        if positive.size == 0 or float(np.min(positive)) > 1e-2 / norm or float(np.max(grid)) < 1.0 / norm:
            raise ValueError(
                "time grid must bracket the generator timescale: need one point "
                f"<= {1e-2 / norm:.3e} and one >= {1.0 / norm:.3e}"
            )
    return grid


@dataclass(frozen=True)
class WitnessReport:
    """Diagnostics behind a classical-vs-quantum verdict.

    ``kolmogorov`` is the decisive generator test (with its worst
    off-diagonal entry and column-sum defect); ``stochastic_on_grid``
    corroborates it with the smallest transfer-matrix entry and the
    (t, i, j) where it occurs; the block fields split the generator along
    the quorum sectors.  ``block_equivalence_held`` records whether
    "Kolmogorov and stochastic on the grid" coincided with "block diagonal
    with Kolmogorov blocks" on this instance.  ``strategy_disagreement`` is
    None when the other lift strategy is not defined for the quorum.
    """

    verdict: str
    strategy: str
    time_grid: np.ndarray
    kolmogorov: bool
    worst_offdiagonal: float
    worst_offdiagonal_index: tuple[int, int]
    max_column_sum: float
    stochastic_on_grid: bool
    min_map_entry: float
    min_map_entry_at: tuple[float, int, int]
    block_diagonal: bool
    off_block_mass: float
    block_kolmogorov: tuple[bool, ...]
    block_equivalence_held: bool
    strategy_disagreement: bool | None
    generator: SimplexGenerator


def witness(gen: GkslGenerator, quorum: Quorum, strategy: str = "pseudoinverse",
            grid=None, tol: float = 1e-9) -> WitnessReport:
    """Classify the lifted dynamics as classical-compatible or quantum-witnessed.

    The verdict is keyed to the Kolmogorov test of the lifted generator (the
    exact criterion for e^{tM} to stay stochastic at *all* times); the grid
    stochasticity scan, block split, and per-block tests corroborate it and
    feed the equivalence record.
    """
    generator = lift_generator(gen, quorum, strategy)
    if grid is None:
        grid = default_time_grid(generator)
    grid = _check_grid(grid, generator.norm1())

    gen_check = is_kolmogorov(generator.matrix, tol=tol)

    min_entry = np.inf
    min_at = (float(grid[0]), 0, 0)
    stochastic_everywhere = True
    for t in grid:
        transfer = lift_map(generator, float(t))
        map_check = is_stochastic(transfer, tol=tol)
        stochastic_everywhere = stochastic_everywhere and map_check.verdict
        if map_check.min_entry < min_entry:
            min_entry = map_check.min_entry
            min_at = (float(t), *map_check.min_entry_index)

    split = block_structure(generator.matrix, generator.partition, tol=tol)
    block_checks = tuple(is_kolmogorov(b, tol=tol).verdict for b in split.blocks)

    lhs = gen_check.verdict and stochastic_everywhere
    rhs = split.is_block_diagonal and all(block_checks)

    disagreement: bool | None = None
    other = "sector-local" if strategy == "pseudoinverse" else "pseudoinverse"
    try:
        other_generator = lift_generator(gen, quorum, other)
    except StrategyUnavailableError:
        other_generator = None
    if other_generator is not None:
        disagreement = is_kolmogorov(other_generator.matrix, tol=tol).verdict != gen_check.verdict

    return WitnessReport(
        verdict=CLASSICAL_COMPATIBLE if gen_check.verdict else QUANTUM_WITNESSED,
        strategy=strategy,
        time_grid=grid,
        kolmogorov=gen_check.verdict,
        worst_offdiagonal=gen_check.worst_offdiagonal,
        worst_offdiagonal_index=gen_check.worst_offdiagonal_index,
        max_column_sum=gen_check.max_column_sum,
        stochastic_on_grid=stochastic_everywhere,
        min_map_entry=float(min_entry),
        min_map_entry_at=min_at,
        block_diagonal=split.is_block_diagonal,
        off_block_mass=split.off_block_mass,
        block_kolmogorov=block_checks,
        block_equivalence_held=(lhs == rhs),
        strategy_disagreement=disagreement,
        generator=generator,
    )
