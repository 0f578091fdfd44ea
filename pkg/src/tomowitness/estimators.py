"""scikit-learn style front end.

``TomographicEncoder`` is a transformer between stacks of density matrices
(shape ``(n, N, N)``) and stacks of probability vectors (shape
``(n, N*A)``); ``QuantumnessWitness`` is a classifier-shaped wrapper that
labels generators by their lifted dynamics.  Both follow the usual
``get_params``/``set_params``/``fit`` contract so they clone and compose
with sklearn tooling.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .exceptions import IncompleteQuorumError
from .lift import CLASSICAL_COMPATIBLE, QUANTUM_WITNESSED, WitnessReport, witness
from .quantum import GkslGenerator
from .tomography import (
    Quorum,
    completeness_check,
    decode,
    encode,
    pauli_quorum,
    sector_labels,
)
from .validation import as_state_stack

__all__ = ["TomographicEncoder", "QuantumnessWitness"]


def _resolve_quorum(quorum, weights, dim_hint: int | None) -> Quorum:
    if quorum is not None:
        return quorum
    if weights is not None:
        return pauli_quorum(weights)
    if dim_hint is not None and dim_hint != 2:
        raise IncompleteQuorumError(
            f"no quorum given and the default Pauli quorum is qubit-only (data dimension {dim_hint})"
        )
    return pauli_quorum()


class TomographicEncoder(TransformerMixin, BaseEstimator):
    """Encode density matrices as tomographic probability vectors.

    Parameters
    ----------
    quorum : Quorum, optional
        Measurement frame.  Defaults to the qubit Pauli quorum.
    weights : sequence of float, optional
        Shortcut for a Pauli quorum with these sector weights.
    sector_tol : float
        Sector-sum tolerance accepted by ``inverse_transform``.
    """

    def __init__(self, quorum=None, weights=None, sector_tol=1e-8):
        self.quorum = quorum
        self.weights = weights
        self.sector_tol = sector_tol

    def fit(self, X, y=None):
        X = as_state_stack(X)
        self.quorum_ = _resolve_quorum(self.quorum, self.weights, X.shape[1])
        if X.shape[1] != self.quorum_.dim:
            raise IncompleteQuorumError(
                f"states have dimension {X.shape[1]}, quorum has {self.quorum_.dim}"
            )
        self.rank_ = completeness_check(self.quorum_)
        if self.rank_ < self.quorum_.dim**2:
            raise IncompleteQuorumError(
                f"quorum is informationally incomplete (rank {self.rank_} < {self.quorum_.dim ** 2})"
            )
        self.n_features_out_ = self.quorum_.size
        return self

    def _check_fitted(self):
        if not hasattr(self, "quorum_"):
            raise NotFittedError("call fit before transform/inverse_transform")

    def transform(self, X) -> np.ndarray:
        self._check_fitted()
        X = as_state_stack(X)
        return np.stack([encode(rho, self.quorum_) for rho in X])

    def inverse_transform(self, P) -> np.ndarray:
        self._check_fitted()
        P = np.atleast_2d(np.asarray(P, dtype=float))
        return np.stack([decode(p, self.quorum_, sum_tol=self.sector_tol) for p in P])

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        self._check_fitted()
        labels = sector_labels(self.quorum_)
        return np.array(
            [f"p[{a},{k + 1}]" for a in labels for k in range(self.quorum_.dim)],
            dtype=object,
        )


class QuantumnessWitness(BaseEstimator):
    """Label generators by whether their lifted simplex dynamics stays stochastic.

    ``predict`` accepts GkslGenerator objects, ``(hamiltonian, jumps)``
    pairs, or bare Hamiltonian matrices, and returns one of the two labels
    in ``classes_`` per sample.
    """

    def __init__(self, quorum=None, weights=None, strategy="pseudoinverse",
                 time_grid=None, tol=1e-9):
        self.quorum = quorum
        self.weights = weights
        self.strategy = strategy
        self.time_grid = time_grid
        self.tol = tol

    def fit(self, X=None, y=None):
        self.quorum_ = _resolve_quorum(self.quorum, self.weights, None)
        if completeness_check(self.quorum_) < self.quorum_.dim**2:
            raise IncompleteQuorumError("quorum is informationally incomplete")
        self.classes_ = np.array([CLASSICAL_COMPATIBLE, QUANTUM_WITNESSED], dtype=object)
        return self

    def _check_fitted(self):
        if not hasattr(self, "quorum_"):
            raise NotFittedError("call fit before predict")

    @staticmethod
    def _as_generator(item) -> GkslGenerator:
        if isinstance(item, GkslGenerator):
            return item
        if isinstance(item, tuple) and len(item) == 2:
            hamiltonian, jumps = item
            return GkslGenerator(hamiltonian=hamiltonian, jumps=tuple(jumps))
        return GkslGenerator(hamiltonian=item)

    def report(self, generator) -> WitnessReport:
        self._check_fitted()
        return witness(self._as_generator(generator), self.quorum_,
                       strategy=self.strategy, grid=self.time_grid, tol=self.tol)

    def predict(self, X) -> np.ndarray:
        return np.array([self.report(item).verdict for item in X], dtype=object)

    def decision_function(self, X) -> np.ndarray:
        """Worst off-diagonal entry of the lifted generator per sample.

        Values >= -tol mean classical-compatible; the more negative, the
        stronger the witness.
        """
        return np.array([self.report(item).worst_offdiagonal for item in X])
