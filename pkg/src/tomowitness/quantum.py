"""Quantum states and generators.

Conventions fixed here and relied on everywhere else:

* Bloch parametrization ``rho = (I + x sx + y sy + z sz)/2``, i.e.
  ``rho_12 = (x - i y)/2``; measurement probabilities along an axis obey
  ``p(1|axis) = (1 + r_axis)/2``.
* ``SIGMA_PLUS`` maps level 1 to level 2 (matrix unit e_21), ``SIGMA_MINUS``
  the reverse.
* Superoperators act on column-stacked matrices (see :mod:`.linalg`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .exceptions import (
    BallViolationError,
    BasisNotOrthonormalError,
    DimensionMismatchError,
    NumericalGuardError,
    PositivityLostError,
    WrongDimensionError,
)
from .validation import as_complex_matrix, as_square, check_hermitian

__all__ = [
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "SIGMA_PLUS",
    "SIGMA_MINUS",
    "GkslGenerator",
    "check_density_matrix",
    "min_eigenvalue",
    "bloch_to_density",
    "density_to_bloch",
    "apply_gksl",
    "liouvillian_matrix",
    "evolve_density",
    "propagator",
    "apply_propagator",
    "diagonal_projection_generator",
    "diagonal_projection_map",
]

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

#: raising operator |2><1|
SIGMA_PLUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
#: lowering operator |1><2|
SIGMA_MINUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)

for _m in (PAULI_X, PAULI_Y, PAULI_Z, SIGMA_PLUS, SIGMA_MINUS):
    _m.flags.writeable = False


def min_eigenvalue(hermitian: np.ndarray) -> float:
    values, _ = linalg.hermitian_eigensystem(hermitian, tol=1e-8)
    return float(values[0])


def check_density_matrix(rho, herm_tol: float = 1e-10, trace_tol: float = 1e-10,
                         psd_tol: float = 1e-10) -> np.ndarray:
    """Validate Hermitian, unit-trace, positive-semidefinite; return the array."""
    rho = check_hermitian(rho, tol=herm_tol, name="density matrix")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > trace_tol:
        raise ValueError(f"density matrix trace {trace!r} deviates from 1 beyond {trace_tol:.1e}")
    smallest = min_eigenvalue(rho)
    if smallest < -psd_tol:
        raise PositivityLostError(
            f"density matrix has eigenvalue {smallest:.3e} below -{psd_tol:.1e}"
        )
    return rho


def bloch_to_density(b) -> np.ndarray:
    """Qubit state (I + x sx + y sy + z sz)/2 from a Bloch vector."""
    b = np.asarray(b, dtype=float)
    if b.shape != (3,):
        raise DimensionMismatchError(f"Bloch vector must have 3 components, got shape {b.shape}")
    norm_sq = float(b @ b)
    if norm_sq > 1.0 + 1e-12:
        raise BallViolationError(f"Bloch vector has |r|^2 = {norm_sq!r} > 1")
    x, y, z = b
    return 0.5 * (np.eye(2, dtype=complex) + x * PAULI_X + y * PAULI_Y + z * PAULI_Z)


def density_to_bloch(rho) -> np.ndarray:
    """(x, y, z) with x = rho_12 + rho_21, y = i(rho_12 - rho_21), z = rho_11 - rho_22."""
    rho = as_square(rho, "density matrix")
    if rho.shape != (2, 2):
        raise WrongDimensionError(f"Bloch decomposition needs a 2x2 state, got {rho.shape}")
    x = (rho[0, 1] + rho[1, 0]).real
    y = (1j * (rho[0, 1] - rho[1, 0])).real
    z = (rho[0, 0] - rho[1, 1]).real
    return np.array([x, y, z])


@dataclass(frozen=True)
class GkslGenerator:
    """Markovian generator data: Hamiltonian plus jump operators.

    Acts on states as ``-i[H, rho] + sum_k (V_k rho V_k^dag
    - {V_k^dag V_k, rho}/2)``.
    """

    hamiltonian: np.ndarray
    jumps: tuple[np.ndarray, ...] = field(default=())

    def __post_init__(self):
        h = check_hermitian(self.hamiltonian, tol=1e-10, name="Hamiltonian")
        object.__setattr__(self, "hamiltonian", h)
        jumps = tuple(as_square(v, f"jump operator {k}") for k, v in enumerate(self.jumps))
        for k, v in enumerate(jumps):
            if v.shape != h.shape:
                raise DimensionMismatchError(
                    f"jump operator {k} has shape {v.shape}, Hamiltonian has {h.shape}"
                )
        object.__setattr__(self, "jumps", jumps)

    @property
    def dim(self) -> int:
        return self.hamiltonian.shape[0]


def _apply_generator(gen: GkslGenerator, a: np.ndarray) -> np.ndarray:
    h = gen.hamiltonian
    out = -1j * (h @ a - a @ h)
    for v in gen.jumps:
        vdv = v.conj().T @ v
        out = out + v @ a @ v.conj().T - 0.5 * (vdv @ a + a @ vdv)
    return out


def apply_gksl(gen: GkslGenerator, rho) -> np.ndarray:
    """Generator action on a state; Hermitian and traceless by construction."""
    rho = as_complex_matrix(rho, "state")
    if rho.shape != (gen.dim, gen.dim):
        raise DimensionMismatchError(
            f"state has shape {rho.shape}, generator dimension is {gen.dim}"
        )
    out = _apply_generator(gen, rho)
    return 0.5 * (out + out.conj().T)


def liouvillian_matrix(gen: GkslGenerator) -> np.ndarray:
    """N^2 x N^2 matrix acting on column-stacked states.

    Satisfies unvec(L vec(rho)) = apply_gksl(gen, rho); the row implementing
    the trace functional vanishes (trace preservation), guarded at 1e-10.
    """
    n = gen.dim
    eye = np.eye(n, dtype=complex)
    h = gen.hamiltonian
    mat = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for v in gen.jumps:
        vdv = v.conj().T @ v
        mat = mat + np.kron(v.conj(), v) - 0.5 * (np.kron(eye, vdv) + np.kron(vdv.T, eye))
    trace_row = linalg.vec(np.eye(n)) @ mat
    defect = float(np.max(np.abs(trace_row)))
    if defect > 1e-10 * max(1.0, float(np.max(np.abs(mat)))):
        raise NumericalGuardError(f"Liouvillian trace row does not vanish: {defect:.3e}")
    return mat


def propagator(gen: GkslGenerator, t: float) -> np.ndarray:
    """e^{t L} on column-stacked states."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return linalg.matrix_exponential(liouvillian_matrix(gen), t)


def apply_propagator(prop: np.ndarray, rho: np.ndarray) -> np.ndarray:
    n = int(round(np.sqrt(prop.shape[0])))
    out = linalg.unvec(prop @ linalg.vec(rho), n)
    return 0.5 * (out + out.conj().T)


def evolve_density(gen: GkslGenerator, rho0, t: float) -> np.ndarray:
    """Solve d rho/dt = L rho exactly via the matrix exponential."""
    rho0 = check_density_matrix(rho0)
    if rho0.shape != (gen.dim, gen.dim):
        raise DimensionMismatchError(
            f"state has shape {rho0.shape}, generator dimension is {gen.dim}"
        )
    rho_t = apply_propagator(propagator(gen, t), rho0)
    smallest = min_eigenvalue(rho_t)
    if smallest < -1e-8:
        raise PositivityLostError(
            f"evolved state has eigenvalue {smallest:.3e}; matrix exponential accuracy lost"
        )
    return rho_t


def _check_orthonormal_rows(basis, tol: float) -> np.ndarray:
    basis = as_square(basis, "basis")
    gram = basis @ basis.conj().T
    defect = float(np.max(np.abs(gram - np.eye(basis.shape[0]))))
    if defect > tol:
        raise BasisNotOrthonormalError(
            f"basis rows deviate from orthonormality by {defect:.3e} > {tol:.3e}"
        )
    return basis


def diagonal_projection_generator(gen: GkslGenerator, basis=None, tol: float = 1e-10) -> np.ndarray:
    """Populations-only shadow M_ij = <e_i| L(|e_j><e_j|) |e_i>.

    ``basis`` holds the orthonormal vectors e_i as rows (computational basis
    when omitted).  The result is a Kolmogorov generator for every valid
    input; that is guarded, not assumed.
    """
    n = gen.dim
    if basis is None:
        basis = np.eye(n, dtype=complex)
    basis = _check_orthonormal_rows(basis, tol)
    if basis.shape[0] != n:
        raise DimensionMismatchError(f"basis dimension {basis.shape[0]} != generator dimension {n}")
    m = np.empty((n, n))
    for j in range(n):
        image = _apply_generator(gen, np.outer(basis[j], basis[j].conj()))
        m[:, j] = np.real(np.einsum("ik,kl,il->i", basis.conj(), image, basis))
    _guard_kolmogorov(m, what="diagonal projection generator", tol=1e-12)
    return m


def diagonal_projection_map(gen: GkslGenerator, t: float, basis=None, tol: float = 1e-10) -> np.ndarray:
    """T_ij(t) = <e_i| e^{tL}(|e_j><e_j|) |e_i>; stochastic for all t >= 0."""
    n = gen.dim
    if basis is None:
        basis = np.eye(n, dtype=complex)
    basis = _check_orthonormal_rows(basis, tol)
    if basis.shape[0] != n:
        raise DimensionMismatchError(f"basis dimension {basis.shape[0]} != generator dimension {n}")
    prop = propagator(gen, t)
    out = np.empty((n, n))
    for j in range(n):
        image = apply_propagator(prop, np.outer(basis[j], basis[j].conj()))
        out[:, j] = np.real(np.einsum("ik,kl,il->i", basis.conj(), image, basis))
    worst = float(np.min(out))
    col_err = float(np.max(np.abs(np.sum(out, axis=0) - 1.0)))
    if worst < -1e-9 or col_err > 1e-9:
        raise NumericalGuardError(
            f"diagonal projection map not stochastic: min entry {worst:.3e}, column-sum error {col_err:.3e}"
        )
    return out


def _guard_kolmogorov(m: np.ndarray, what: str, tol: float = 1e-9) -> None:
    off = m - np.diag(np.diag(m))
    worst = float(np.min(off))
    col = float(np.max(np.abs(np.sum(m, axis=0))))
    if worst < -tol or col > tol:
        raise NumericalGuardError(
            f"{what} violates Kolmogorov conditions: worst off-diagonal {worst:.3e}, column sum {col:.3e}"
        )
