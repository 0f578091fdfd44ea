"""Classical stochastic dynamics on the simplex.

Column-stochastic convention throughout: columns of a stochastic matrix sum
to one, columns of a Kolmogorov generator sum to zero.  (The transpose, row
convention is equally common elsewhere; everything here is column-based.)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .exceptions import DimensionMismatchError, NegativeRateError
from .validation import as_square_real, check_probability_vector

__all__ = [
    "StochasticityCheck",
    "KolmogorovCheck",
    "is_stochastic",
    "is_kolmogorov",
    "generator_from_rates",
    "pauli_rate_rhs",
    "evolve_classical",
]


@dataclass(frozen=True)
class StochasticityCheck:
    verdict: bool
    min_entry: float
    max_column_sum_error: float
    min_entry_index: tuple[int, int]


@dataclass(frozen=True)
class KolmogorovCheck:
    verdict: bool
    worst_offdiagonal: float
    max_column_sum: float
    worst_offdiagonal_index: tuple[int, int]


def is_stochastic(t, tol: float = 1e-9) -> StochasticityCheck:
    """Entrywise nonnegativity and unit column sums, within tol."""
    t = as_square_real(t, "matrix")
    flat_argmin = int(np.argmin(t))
    index = (flat_argmin // t.shape[1], flat_argmin % t.shape[1])
    min_entry = float(t[index])
    col_err = float(np.max(np.abs(np.sum(t, axis=0) - 1.0)))
    return StochasticityCheck(
        verdict=(min_entry >= -tol and col_err <= tol),
        min_entry=min_entry,
        max_column_sum_error=col_err,
        min_entry_index=index,
    )


def is_kolmogorov(m, tol: float = 1e-9) -> KolmogorovCheck:
    """Nonnegative off-diagonal entries and zero column sums, within tol."""
    m = as_square_real(m, "matrix")
    n = m.shape[0]
    if n == 1:
        col = abs(float(m[0, 0]))
        return KolmogorovCheck(col <= tol, 0.0, col, (0, 0))
    off = m.copy()
    np.fill_diagonal(off, np.inf)
    flat_argmin = int(np.argmin(off))
    index = (flat_argmin // n, flat_argmin % n)
    worst = float(off[index])
    col = float(np.max(np.abs(np.sum(m, axis=0))))
    return KolmogorovCheck(
        verdict=(worst >= -tol and col <= tol),
        worst_offdiagonal=worst,
        max_column_sum=col,
        worst_offdiagonal_index=index,
    )


def generator_from_rates(rates) -> np.ndarray:
    """Kolmogorov generator with off-diagonals pi_ij and columns summing to zero.

    Diagonal entries of ``rates`` are ignored (they cancel out of the rate
    equation); off-diagonal entries must be nonnegative.
    """
    rates = as_square_real(rates, "rates")
    n = rates.shape[0]
    off = rates.copy()
    np.fill_diagonal(off, 0.0)
    if float(np.min(off)) < 0.0:
        i, j = np.unravel_index(int(np.argmin(off)), off.shape)
        raise NegativeRateError(f"transition rate [{i},{j}] = {off[i, j]!r} is negative")
    return off - np.diag(np.sum(off, axis=0))


def pauli_rate_rhs(rates, p) -> np.ndarray:
    """Gain/loss balance dp_i/dt = sum_j (pi_ij p_j - pi_ji p_i)."""
    rates = as_square_real(rates, "rates")
    p = check_probability_vector(p)
    if p.shape[0] != rates.shape[0]:
        raise DimensionMismatchError(
            f"distribution has {p.shape[0]} entries, rates are {rates.shape[0]}x{rates.shape[0]}"
        )
    return rates @ p - np.sum(rates, axis=0) * p


def evolve_classical(m, p0, t: float) -> np.ndarray:
    """p(t) = e^{tM} p0 for a Kolmogorov generator M."""
    m = as_square_real(m, "generator")
    p0 = check_probability_vector(p0)
    if p0.shape[0] != m.shape[0]:
        raise DimensionMismatchError(
            f"distribution has {p0.shape[0]} entries, generator is {m.shape[0]}x{m.shape[0]}"
        )
    if t < 0:
        raise ValueError("t must be nonnegative")
    check = is_kolmogorov(m)
    if not check.verdict:
        raise ValueError(
            "generator fails Kolmogorov conditions: "
            f"worst off-diagonal {check.worst_offdiagonal:.3e}, column sum {check.max_column_sum:.3e}"
        )
    p_t = linalg.matrix_exponential(m, t) @ p0
    return check_probability_vector(p_t, tol_negative=1e-9, tol_sum=1e-9)
