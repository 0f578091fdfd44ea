"""Dense small-matrix kernels.

Self-contained implementations sized for the matrices this package meets
(nothing larger than ~36x36): a cyclic Jacobi eigensolver for Hermitian
matrices, a scaling-and-squaring matrix exponential, and least squares /
pseudoinverse via the normal equations.  Also houses the vectorization
conventions used everywhere else:

* ``vec``/``unvec`` stack matrix COLUMNS (so matrices acting on vec(rho)
  are reproducible byte-for-byte),
* ``hermitian_basis`` fixes a Hilbert-Schmidt-orthonormal basis of the
  real vector space of Hermitian matrices, ordered diagonals first, then
  for each i<j the symmetric and antisymmetric pair.
"""

from __future__ import annotations

import numpy as np

from .exceptions import NumericalGuardError, RankDeficientError
from .validation import as_real_matrix, as_square, as_vector, check_hermitian

__all__ = [
    "hermitian_eigensystem",
    "matrix_exponential",
    "least_squares_solve",
    "pseudoinverse",
    "vec",
    "unvec",
    "hermitian_basis",
    "hvec",
    "unhvec",
]

#: relative eigenvalue cutoff below which a Gram matrix counts as rank deficient
RANK_RTOL = 1e-12

#: off-diagonal Frobenius norm (relative) at which Jacobi sweeps stop
_JACOBI_TOL = 1e-13

_MAX_SWEEPS = 60


def _offdiagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def hermitian_eigensystem(a, tol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and unitary eigenvectors of a Hermitian matrix.

    Cyclic Jacobi with complex rotations: each sweep visits every upper
    off-diagonal entry and annihilates it with a unitary similarity.
    ``tol`` bounds the accepted hermiticity defect of the input.
    """
    a = check_hermitian(a, tol=tol, name="matrix")
    n = a.shape[0]
    w = np.array(a, dtype=complex)
    v = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(w))
    if scale == 0.0 or n == 1:
        return np.real(np.diag(w)).copy(), v

    threshold = _JACOBI_TOL * scale
    for _ in range(_MAX_SWEEPS):
        if _offdiagonal_norm(w) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                b = abs(apq)
                if b <= threshold / (n * n):
                    continue
                phase = apq / b
                app = w[p, p].real
                aqq = w[q, q].real
                tau = (aqq - app) / (2.0 * b)
                if abs(tau) > 1e12:
                    t = 1.0 / (2.0 * tau)
                else:
                    t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau)) if tau != 0.0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                # unitary J: J[p,p]=c, J[p,q]=s, J[q,p]=-s*conj(phase), J[q,q]=c*conj(phase)
                cp = np.conj(phase)
                col_p = w[:, p].copy()
                col_q = w[:, q].copy()
                w[:, p] = c * col_p - s * cp * col_q
                w[:, q] = s * col_p + c * cp * col_q
                row_p = w[p, :].copy()
                row_q = w[q, :].copy()
                w[p, :] = c * row_p - s * phase * row_q
                w[q, :] = s * row_p + c * phase * row_q
                w[p, q] = 0.0
                w[q, p] = 0.0
                w[p, p] = w[p, p].real
                w[q, q] = w[q, q].real
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p - s * cp * vcol_q
                v[:, q] = s * vcol_p + c * cp * vcol_q
    else:
        raise NumericalGuardError("Jacobi eigensolver did not converge")

    eigenvalues = np.real(np.diag(w))
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order].copy(), v[:, order].copy()


def matrix_exponential(a, t: float = 1.0) -> np.ndarray:
    """e^{t A} by scaling and squaring with a Horner-evaluated Taylor series.

    ``t A`` is halved until its 1-norm drops below 0.5; at that size a
    24-term series is exact to double precision, and the result is squared
    back up.  Works for real and complex square matrices alike.
    """
    a = as_square(a, "matrix")
    if not np.isfinite(t):
        raise ValueError("t must be finite")
    n = a.shape[0]
    was_real = np.max(np.abs(a.imag)) == 0.0
    b = a * t
    norm1 = float(np.max(np.sum(np.abs(b), axis=0))) if n else 0.0
    squarings = 0
    if norm1 > 0.5:
        squarings = int(np.ceil(np.log2(norm1 / 0.5)))
        b = b / (2.0**squarings)
    eye = np.eye(n, dtype=complex)
    result = eye.copy()
    for k in range(24, 0, -1):
        result = eye + (b / k) @ result
    for _ in range(squarings):
        result = result @ result
    if was_real:
        return np.real(result)
    return result


def _gram_eigensystem(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    gram = a.conj().T @ a
    eigenvalues, vectors = hermitian_eigensystem(gram, tol=1e-8 * max(1.0, float(np.max(np.abs(gram)))))
    largest = eigenvalues[-1]
    if largest <= 0.0 or eigenvalues[0] < RANK_RTOL * largest:
        raise RankDeficientError(
            f"Gram spectrum [{eigenvalues[0]:.3e}, {largest:.3e}] below relative rank threshold {RANK_RTOL:.1e}"
        )
    return eigenvalues, vectors, gram


def least_squares_solve(a, b) -> np.ndarray:
    """argmin_x ||A x - b||_2 for a full-column-rank A (m >= n).

    Solved through the normal equations; the Gram matrix doubles as the
    rank guard, with the relative cutoff ``RANK_RTOL``.
    """
    a = as_real_matrix(a, "matrix")
    b = as_vector(b, "rhs")
    m, n = a.shape
    if b.shape[0] != m:
        raise ValueError(f"rhs length {b.shape[0]} does not match {m} rows")
    if m < n:
        raise RankDeficientError(f"system is underdetermined: {m} rows < {n} columns")
    eigenvalues, vectors, _ = _gram_eigensystem(a)
    vectors = np.real(vectors)
    rhs = a.T @ b
    return vectors @ ((vectors.T @ rhs) / eigenvalues)


def pseudoinverse(a) -> np.ndarray:
    """Moore-Penrose inverse (A^T A)^{-1} A^T of a full-column-rank matrix."""
    a = as_real_matrix(a, "matrix")
    if a.shape[0] < a.shape[1]:
        raise RankDeficientError(
            f"pseudoinverse expects at least as many rows as columns, got {a.shape}"
        )
    eigenvalues, vectors, _ = _gram_eigensystem(a)
    vectors = np.real(vectors)
    return (vectors / eigenvalues) @ vectors.T @ a.T


def vec(a: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization."""
    return np.asarray(a).T.reshape(-1)


def unvec(v: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`vec` for an n x n matrix."""
    return np.asarray(v).reshape(n, n).T


def hermitian_basis(dim: int) -> list[np.ndarray]:
    """Hilbert-Schmidt-orthonormal basis of the Hermitian dim x dim matrices.

    Order: E_11 .. E_NN, then for each i<j the pair
    (E_ij + E_ji)/sqrt(2) and (-i E_ij + i E_ji)/sqrt(2).
    """
    basis: list[np.ndarray] = []
    for i in range(dim):
        e = np.zeros((dim, dim), dtype=complex)
        e[i, i] = 1.0
        basis.append(e)
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for i in range(dim):
        for j in range(i + 1, dim):
            sym = np.zeros((dim, dim), dtype=complex)
            sym[i, j] = inv_sqrt2
            sym[j, i] = inv_sqrt2
            basis.append(sym)
            skew = np.zeros((dim, dim), dtype=complex)
            skew[i, j] = -1j * inv_sqrt2
            skew[j, i] = 1j * inv_sqrt2
            basis.append(skew)
    return basis


def hvec(a: np.ndarray) -> np.ndarray:
    """Real coordinates of a Hermitian matrix in :func:`hermitian_basis`."""
    a = np.asarray(a, dtype=complex)
    dim = a.shape[0]
    coords = np.empty(dim * dim)
    coords[:dim] = np.real(np.diag(a))
    k = dim
    sqrt2 = np.sqrt(2.0)
    for i in range(dim):
        for j in range(i + 1, dim):
            coords[k] = sqrt2 * a[i, j].real
            coords[k + 1] = -sqrt2 * a[i, j].imag
            k += 2
    return coords


def unhvec(coords: np.ndarray, dim: int) -> np.ndarray:
    """Inverse of :func:`hvec`."""
    coords = np.asarray(coords, dtype=float)
    a = np.zeros((dim, dim), dtype=complex)
    a[np.diag_indices(dim)] = coords[:dim]
    k = dim
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for i in range(dim):
        for j in range(i + 1, dim):
            a[i, j] = (coords[k] - 1j * coords[k + 1]) * inv_sqrt2
            a[j, i] = np.conj(a[i, j])
            k += 2
    return a
