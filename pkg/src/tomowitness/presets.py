"""Named qubit models used by the golden tests and the CLI.

Each preset returns the generator together with the Pauli quorum carrying
the requested weights, so a preset name plus parameters pins down the whole
lifted dynamics.
"""

from __future__ import annotations

import numpy as np

from .quantum import GkslGenerator, PAULI_X, PAULI_Y, PAULI_Z, SIGMA_MINUS, SIGMA_PLUS
from .tomography import Quorum, pauli_quorum

__all__ = ["example1", "example2", "example3", "PRESETS", "EXAMPLE1_COUPLING_NOTE"]

#: printed whenever example1's lifted matrix is reported (see lift tests);
#: guards against a tempting factor-2 slip in the y-sector rows.
EXAMPLE1_COUPLING_NOTE = (
    "NOTE: with H = omega*sigma_x the y/z sector coupling entries are "
    "-/+ omega*mu (y rows) and +/- omega/mu (z rows), mu = pi_y/pi_z, so the "
    "nonzero eigenvalues are +/- 2i*omega. Writing -/+ 2*omega*mu in the y "
    "rows while keeping omega/mu in the z rows is inconsistent with the "
    "Bloch equations dy/dt = -2*omega*z, dz/dt = 2*omega*y (it would "
    "oscillate at 2*sqrt(2)*|omega|)."
)


def _check_rates(**rates: float) -> None:
    for name, value in rates.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value!r}")


def example1(omega: float, weights=(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)) -> tuple[GkslGenerator, Quorum]:
    """Purely Hamiltonian qubit, H = omega * sigma_x."""
    gen = GkslGenerator(hamiltonian=omega * PAULI_X)
    return gen, pauli_quorum(weights)


def example2(omega: float, gamma1: float, gamma2: float, gamma3: float,
             weights=(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)) -> tuple[GkslGenerator, Quorum]:
    """Damped qubit: H = (omega/2) sigma_z with raising, lowering and dephasing noise."""
    _check_rates(gamma1=gamma1, gamma2=gamma2, gamma3=gamma3)
    jumps = []
    if gamma1 > 0:
        jumps.append(np.sqrt(gamma1) * SIGMA_PLUS)
    if gamma2 > 0:
        jumps.append(np.sqrt(gamma2) * SIGMA_MINUS)
    if gamma3 > 0:
        jumps.append(np.sqrt(gamma3 / 2.0) * PAULI_Z)
    gen = GkslGenerator(hamiltonian=0.5 * omega * PAULI_Z, jumps=tuple(jumps))
    return gen, pauli_quorum(weights)


def example3(gamma1: float, gamma2: float, gamma3: float,
             weights=(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)) -> tuple[GkslGenerator, Quorum]:
    """Pauli random-unitary qubit: jumps sqrt(gamma_k) sigma_k, no Hamiltonian."""
    _check_rates(gamma1=gamma1, gamma2=gamma2, gamma3=gamma3)
    jumps = tuple(
        np.sqrt(g) * sigma
        for g, sigma in zip((gamma1, gamma2, gamma3), (PAULI_X, PAULI_Y, PAULI_Z))
        if g > 0
    )
    gen = GkslGenerator(hamiltonian=np.zeros((2, 2)), jumps=jumps)
    return gen, pauli_quorum(weights)


PRESETS = {
    "example1": example1,
    "example2": example2,
    "example3": example3,
}
