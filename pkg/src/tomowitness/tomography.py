"""Quorums and the encode/decode between states and probability vectors.

A quorum is a weighted family of orthonormal measurement bases.  A state
rho maps to the stacked vector with entries ``weight_a * <b|rho|b>``,
sector-major (all outcomes of sector 1, then sector 2, ...).  Probabilities
follow ``p(1|axis) = (1 + r_axis)/2`` for the qubit axis bases, with the
+1 eigenvector listed first.  Basis vectors are fixed only up to phase;
compare projectors, not vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .exceptions import (
    BadWeightsError,
    BasisNotOrthonormalError,
    DimensionMismatchError,
    IncompleteQuorumError,
    SectorSumViolationError,
    WrongQuorumShapeError,
)
from .quantum import PAULI_X, PAULI_Y, PAULI_Z, check_density_matrix, min_eigenvalue
from .validation import as_square, as_vector

__all__ = [
    "Quorum",
    "basis_from_axis",
    "pauli_quorum",
    "is_pauli_quorum",
    "sector_labels",
    "frame_matrix",
    "encode_hermitian",
    "encode",
    "check_tomographic_vector",
    "decode",
    "completeness_check",
    "in_quantum_subset",
    "ellipsoid_membership",
]


def _check_basis(basis, dim: int, tol: float, name: str) -> np.ndarray:
    basis = as_square(basis, name)
    if basis.shape[0] != dim:
        raise DimensionMismatchError(f"{name} has dimension {basis.shape[0]}, expected {dim}")
    gram = basis @ basis.conj().T
    defect = float(np.max(np.abs(gram - np.eye(dim))))
    if defect > tol:
        raise BasisNotOrthonormalError(f"{name} rows deviate from orthonormality by {defect:.3e}")
    return basis


@dataclass(frozen=True)
class Quorum:
    """Measurement bases (vectors as rows) with strictly positive weights."""

    bases: tuple[np.ndarray, ...]
    weights: np.ndarray

    def __post_init__(self):
        if not self.bases:
            raise BadWeightsError("quorum needs at least one sector")
        dim = np.asarray(self.bases[0]).shape[0]
        bases = tuple(
            _check_basis(b, dim, 1e-10, f"basis {k}") for k, b in enumerate(self.bases)
        )
        weights = as_vector(self.weights, "weights")
        if weights.shape[0] != len(bases):
            raise BadWeightsError(
                f"{len(bases)} bases but {weights.shape[0]} weights"
            )
        if np.min(weights) <= 0.0:
            raise BadWeightsError(f"weights must be strictly positive, got {weights.tolist()}")
        if abs(float(np.sum(weights)) - 1.0) > 1e-12:
            raise BadWeightsError(f"weights sum to {float(np.sum(weights))!r}, expected 1")
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "weights", weights)

    @property
    def dim(self) -> int:
        return self.bases[0].shape[0]

    @property
    def n_sectors(self) -> int:
        return len(self.bases)

    @property
    def size(self) -> int:
        return self.dim * self.n_sectors


def basis_from_axis(theta: float, phi: float) -> np.ndarray:
    """Eigenbasis of n.sigma for n = (sin t cos p, sin t sin p, cos t), +1 first."""
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    phase = np.exp(1j * phi)
    return np.array([[c, phase * s], [s, -phase * c]], dtype=complex)


_PAULI_BASES = (
    np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0),
    np.array([[1.0, 1.0j], [1.0, -1.0j]], dtype=complex) / np.sqrt(2.0),
    np.eye(2, dtype=complex),
)


def pauli_quorum(weights=(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)) -> Quorum:
    """Qubit quorum of the sigma_x, sigma_y, sigma_z eigenbases."""
    return Quorum(bases=_PAULI_BASES, weights=np.asarray(weights, dtype=float))


def is_pauli_quorum(quorum: Quorum, tol: float = 1e-10) -> bool:
    """True when the sectors are the x, y, z axis bases in that order."""
    if quorum.dim != 2 or quorum.n_sectors != 3:
        return False
    for basis, sigma in zip(quorum.bases, (PAULI_X, PAULI_Y, PAULI_Z)):
        projector = np.outer(basis[0], basis[0].conj())
        if np.max(np.abs(projector - 0.5 * (np.eye(2) + sigma))) > tol:
            return False
    return True


def sector_labels(quorum: Quorum) -> list[str]:
    if is_pauli_quorum(quorum):
        return ["x", "y", "z"]
    return [str(k + 1) for k in range(quorum.n_sectors)]


def frame_matrix(quorum: Quorum) -> np.ndarray:
    """Linear encode map on Hermitian space, shape (N*A, N^2).

    Row (a, k) applied to hvec(H) gives weight_a * <b_k^a| H |b_k^a>.
    """
    dim = quorum.dim
    basis_elements = linalg.hermitian_basis(dim)
    e = np.empty((quorum.size, dim * dim))
    for a, (basis, weight) in enumerate(zip(quorum.bases, quorum.weights)):
        for k in range(dim):
            vector = basis[k]
            for j, element in enumerate(basis_elements):
                e[a * dim + k, j] = weight * np.real(vector.conj() @ element @ vector)
    return e


def encode_hermitian(matrix: np.ndarray, quorum: Quorum) -> np.ndarray:
    """Raw linear encode of any Hermitian matrix (no simplex validation)."""
    matrix = as_square(matrix, "matrix")
    if matrix.shape[0] != quorum.dim:
        raise DimensionMismatchError(
            f"matrix dimension {matrix.shape[0]} != quorum dimension {quorum.dim}"
        )
    out = np.empty(quorum.size)
    for a, (basis, weight) in enumerate(zip(quorum.bases, quorum.weights)):
        for k in range(quorum.dim):
            out[a * quorum.dim + k] = weight * np.real(basis[k].conj() @ matrix @ basis[k])
    return out


def encode(rho, quorum: Quorum) -> np.ndarray:
    """Tomographic probability vector of a state."""
    rho = check_density_matrix(rho)
    p = encode_hermitian(rho, quorum)
    return check_tomographic_vector(p, quorum)


def check_tomographic_vector(p, quorum: Quorum, neg_tol: float = 1e-12,
                             sum_tol: float = 1e-10) -> np.ndarray:
    """Validate entry positivity and per-sector sums against the weights."""
    p = as_vector(p, "tomographic vector")
    if p.shape[0] != quorum.size:
        raise DimensionMismatchError(
            f"vector length {p.shape[0]} != quorum size {quorum.size}"
        )
    if float(np.min(p)) < -neg_tol:
        raise ValueError(f"tomographic vector has negative entry {float(np.min(p)):.3e}")
    _check_sector_sums(p, quorum, sum_tol)
    return p


def _check_sector_sums(p: np.ndarray, quorum: Quorum, tol: float) -> None:
    sums = p.reshape(quorum.n_sectors, quorum.dim).sum(axis=1)
    worst = float(np.max(np.abs(sums - quorum.weights)))
    if worst > tol:
        raise SectorSumViolationError(
            f"sector sums deviate from weights by {worst:.3e} > {tol:.1e}"
        )


def completeness_check(quorum: Quorum) -> int:
    """Rank of the frame map on Hermitian space; complete iff rank == N^2."""
    e = frame_matrix(quorum)
    gram = e.T @ e
    values, _ = linalg.hermitian_eigensystem(gram, tol=1e-8 * max(1.0, float(np.max(np.abs(gram)))))
    largest = float(values[-1])
    if largest <= 0.0:
        return 0
    return int(np.sum(values > linalg.RANK_RTOL * largest))


def decode(p, quorum: Quorum, sum_tol: float = 1e-8) -> np.ndarray:
    """Least-squares reconstruction of the Hermitian matrix behind a vector.

    Positivity is intentionally not enforced; use :func:`in_quantum_subset`
    to test membership in the quantum set.
    """
    p = as_vector(p, "tomographic vector")
    if p.shape[0] != quorum.size:
        raise DimensionMismatchError(
            f"vector length {p.shape[0]} != quorum size {quorum.size}"
        )
    dim = quorum.dim
    if completeness_check(quorum) < dim * dim:
        raise IncompleteQuorumError(
            f"quorum frame rank below {dim * dim}; reconstruction is not unique"
        )
    _check_sector_sums(p, quorum, sum_tol)
    coords = linalg.least_squares_solve(frame_matrix(quorum), p)
    return linalg.unhvec(coords, dim)


def in_quantum_subset(p, quorum: Quorum, tol: float = 1e-9,
                      sum_tol: float = 1e-8) -> tuple[bool, float]:
    """Membership in the quantum subset plus the decoded minimum eigenvalue."""
    rho = decode(p, quorum, sum_tol=sum_tol)
    smallest = min_eigenvalue(rho)
    return smallest >= -tol, smallest


def ellipsoid_membership(p, weights) -> float:
    """Quadratic form locating a qubit Pauli vector relative to the state ellipsoid.

    Returns sum_a (p_1^a - w_a/2)^2 / (w_a/2)^2; at most 1 exactly on
    vectors that decode to positive states (it equals |Bloch vector|^2).
    """
    p = as_vector(p, "tomographic vector")
    weights = as_vector(weights, "weights")
    if p.shape[0] != 6 or weights.shape[0] != 3:
        raise WrongQuorumShapeError(
            f"expected a 6-vector over a 3-sector qubit quorum, got {p.shape[0]} entries, {weights.shape[0]} weights"
        )
    if np.min(weights) <= 0.0 or abs(float(np.sum(weights)) - 1.0) > 1e-12:
        raise WrongQuorumShapeError(f"weights must be positive and sum to 1, got {weights.tolist()}")
    half = weights / 2.0
    tops = p[0::2]
    return float(np.sum((tops - half) ** 2 / half**2))
