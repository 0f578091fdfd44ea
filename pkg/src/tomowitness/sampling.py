"""Seeded random model constructors for property tests and reports."""

from __future__ import annotations

import numpy as np

from .quantum import GkslGenerator
from .tomography import Quorum

__all__ = [
    "random_hermitian",
    "random_traceless_hermitian",
    "random_density_matrix",
    "random_pure_density",
    "random_unitary",
    "random_quorum",
    "random_gksl",
    "random_rates",
]


def _ginibre(dim: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    a = _ginibre(dim, rng)
    return scale * 0.5 * (a + a.conj().T)


def random_traceless_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    h = random_hermitian(dim, rng, scale)
    return h - (np.trace(h) / dim) * np.eye(dim)


def random_density_matrix(dim: int, rng: np.random.Generator) -> np.ndarray:
    g = _ginibre(dim, rng)
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_pure_density(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(_ginibre(dim, rng))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_quorum(dim: int, rng: np.random.Generator, n_sectors: int | None = None,
                  uniform_weights: bool = True) -> Quorum:
    """Quorum of n_sectors random bases (default N+1, the minimal generic count)."""
    if n_sectors is None:
        n_sectors = dim + 1
    bases = tuple(random_unitary(dim, rng) for _ in range(n_sectors))
    if uniform_weights:
        weights = np.full(n_sectors, 1.0 / n_sectors)
    else:
        raw = rng.uniform(0.2, 1.0, size=n_sectors)
        weights = raw / raw.sum()
    return Quorum(bases=bases, weights=weights)


def random_gksl(dim: int, rng: np.random.Generator, n_jumps: int = 2,
                hamiltonian_scale: float = 1.0, jump_scale: float = 1.0) -> GkslGenerator:
    jumps = tuple(jump_scale * _ginibre(dim, rng) / np.sqrt(dim) for _ in range(n_jumps))
    return GkslGenerator(
        hamiltonian=random_hermitian(dim, rng, hamiltonian_scale),
        jumps=jumps,
    )


def random_rates(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Nonnegative off-diagonal transition rates (diagonal left at zero)."""
    rates = scale * rng.uniform(0.0, 1.0, size=(n, n))
    np.fill_diagonal(rates, 0.0)
    return rates
