"""Input validation helpers shared by all modules.

Conversion functions return freshly-allocated, read-only numpy arrays so
validated values can be shared between threads without defensive copies.
"""

from __future__ import annotations

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    NotHermitianError,
)


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    m = np.array(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionMismatchError(f"{name} must be a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return _freeze(m)


def as_real_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a finite 2-D float array."""
    try:
        m = np.array(a, dtype=float)
    except TypeError as exc:
        raise ValueError(f"{name} must be real: {exc}") from None
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionMismatchError(f"{name} must be a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite entries")
    return _freeze(m)


def as_square(a, name: str = "matrix") -> np.ndarray:
    m = as_complex_matrix(a, name)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {m.shape}")
    return m


def as_square_real(a, name: str = "matrix") -> np.ndarray:
    m = as_real_matrix(a, name)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {m.shape}")
    return m


def hermiticity_defect(a: np.ndarray) -> float:
    """max |A - A^dagger| entrywise."""
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def check_hermitian(a, tol: float = 1e-10, name: str = "matrix") -> np.ndarray:
    m = as_square(a, name)
    defect = hermiticity_defect(m)
    if defect > tol:
        raise NotHermitianError(
            f"{name} is not Hermitian: max |A - A^dagger| = {defect:.3e} > {tol:.3e}"
        )
    return m


def as_vector(a, name: str = "vector") -> np.ndarray:
    try:
        v = np.array(a, dtype=float)
    except TypeError as exc:
        raise ValueError(f"{name} must be real: {exc}") from None
    if v.ndim != 1 or v.size < 1:
        raise DimensionMismatchError(f"{name} must be a 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite entries")
    return _freeze(v)


def check_probability_vector(p, tol_negative: float = 1e-12, tol_sum: float = 1e-10,
                             name: str = "probability vector") -> np.ndarray:
    """Nonnegative (within tol) entries summing to one (within tol)."""
    v = as_vector(p, name)
    if np.min(v) < -tol_negative:
        raise ValueError(f"{name} has a negative entry {np.min(v):.3e}")
    total = float(np.sum(v))
    if abs(total - 1.0) > tol_sum:
        raise ValueError(f"{name} sums to {total!r}, expected 1 within {tol_sum:.1e}")
    return v


def as_state_stack(X, name: str = "X") -> np.ndarray:
    """Coerce a single matrix or a stack of matrices to shape (n, N, N)."""
    arr = np.asarray(X, dtype=complex)
    if arr.ndim == 2:
        arr = arr[np.newaxis, :, :]
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise DimensionMismatchError(
            f"{name} must be one square matrix or a stack of square matrices, got shape {arr.shape}"
        )
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr
