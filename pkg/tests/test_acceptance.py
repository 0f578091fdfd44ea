"""Acceptance criteria, one test per criterion at its stated tolerance.

Each test prints a ``ACCEPTANCE <n>: PASS`` line on success (visible with
``pytest -s``; ``pytest -v`` shows the same via the test names).
"""

import json

import numpy as np
import pytest

from tomowitness import (
    EXAMPLE1_COUPLING_NOTE,
    GkslGenerator,
    consistency_check,
    decode,
    ellipsoid_membership,
    encode,
    evolve_density,
    example1,
    example2,
    example3,
    is_kolmogorov,
    is_stochastic,
    lift_generator,
    matrix_exponential,
    pauli_quorum,
    witness,
)
from tomowitness.cli import main as cli_main
from tomowitness.classical import generator_from_rates
from tomowitness.quantum import PAULI_X, PAULI_Y, PAULI_Z
from tomowitness.sampling import (
    random_density_matrix,
    random_gksl,
    random_pure_density,
    random_quorum,
    random_rates,
    random_traceless_hermitian,
)
from tomowitness.tomography import encode_hermitian

STRATEGIES = ("pseudoinverse", "sector-local")
PAULIS_WITH_IDENTITY = (np.eye(2, dtype=complex), PAULI_X, PAULI_Y, PAULI_Z)


def random_weights(rng):
    w = rng.uniform(0.2, 1.0, size=3)
    return tuple(w / w.sum())


def flip_block(gamma):
    return gamma * np.array([[-1.0, 1.0], [1.0, -1.0]])


@pytest.mark.acceptance
def test_c01_example3_golden_matrix():
    rng = np.random.default_rng(101)
    for _ in range(10):
        g1, g2, g3 = rng.uniform(0.1, 3.0, size=3)
        weights = random_weights(rng)
        gen, quorum = example3(g1, g2, g3, weights=weights)
        expected = np.zeros((6, 6))
        for a, gamma in enumerate((g2 + g3, g1 + g3, g1 + g2)):
            expected[2 * a:2 * a + 2, 2 * a:2 * a + 2] = flip_block(gamma)
        for strategy in STRATEGIES:
            lifted = lift_generator(gen, quorum, strategy)
            assert np.max(np.abs(lifted.matrix - expected)) <= 1e-10
    print("ACCEPTANCE 1: PASS - example3 lifts to the three flip blocks (10 draws, both strategies)")


@pytest.mark.acceptance
def test_c02_example2_golden_matrix():
    rng = np.random.default_rng(102)
    for _ in range(10):
        omega = rng.uniform(-2.0, 2.0)
        g1, g2, g3 = rng.uniform(0.1, 2.0, size=3)
        weights = random_weights(rng)
        gen, quorum = example2(omega, g1, g2, g3, weights=weights)
        lifted = lift_generator(gen, quorum, "sector-local")
        gam = 0.5 * (g1 + g2) + g3
        nu = weights[0] / weights[1]
        expected = 0.5 * np.array([
            [-gam, gam, -omega * nu, omega * nu, 0.0, 0.0],
            [gam, -gam, omega * nu, -omega * nu, 0.0, 0.0],
            [omega / nu, -omega / nu, -gam, gam, 0.0, 0.0],
            [-omega / nu, omega / nu, gam, -gam, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, -2.0 * g1, 2.0 * g2],
            [0.0, 0.0, 0.0, 0.0, 2.0 * g1, -2.0 * g2],
        ])
        assert np.max(np.abs(lifted.matrix - expected)) <= 1e-10
        # realized omega-sign validated against the finite-difference oracle
        # (4 P(h) - P(2h) - 3 P(0)) / (2h) = M P(0) + O(h^2)
        h = 1e-4
        for _ in range(3):
            rho = random_density_matrix(2, rng)
            p = np.array(encode(rho, quorum))
            numeric = (
                4.0 * encode_hermitian(evolve_density(gen, rho, h), quorum)
                - encode_hermitian(evolve_density(gen, rho, 2 * h), quorum)
                - 3.0 * p
            ) / (2.0 * h)
            assert np.max(np.abs(numeric - lifted.matrix @ p)) <= 1e-5
    print("ACCEPTANCE 2: PASS - example2 sector-local lift matches the closed 6x6 form, sign oracle-confirmed")


@pytest.mark.acceptance
def test_c03_example1_frequency_and_note(tmp_path, capsys):
    rng = np.random.default_rng(103)
    for omega in (1.0, -0.7, 2.3):
        weights = random_weights(rng)
        gen, quorum = example1(omega, weights=weights)
        for strategy in STRATEGIES:
            eigenvalues = np.linalg.eigvals(lift_generator(gen, quorum, strategy).matrix)
            assert abs(np.max(np.abs(eigenvalues.imag)) - 2.0 * abs(omega)) <= 1e-9
            assert np.max(np.abs(eigenvalues.real)) <= 1e-9
    config = tmp_path / "c.json"
    config.write_text(json.dumps({
        "dimension": 2,
        "quorum": {"type": "pauli", "weights": [1 / 3, 1 / 3, 1 / 3]},
        "generator": {"preset": "example1", "omega": 1.0},
        "strategy": "sector-local",
    }))
    assert cli_main(["witness", "--config", str(config)]) == 0
    out = capsys.readouterr().out
    assert EXAMPLE1_COUPLING_NOTE in out
    print("ACCEPTANCE 3: PASS - example1 y/z coupling oscillates at 2|omega|; discrepancy note printed")


@pytest.mark.acceptance
@pytest.mark.parametrize("generator,expected", [
    ({"preset": "example1", "omega": 1.0}, "quantum-witnessed"),
    ({"preset": "example1", "omega": -1.0}, "quantum-witnessed"),
    ({"preset": "example2", "omega": 1.0, "gamma": [1.0, 1.0, 1.0]}, "quantum-witnessed"),
    ({"preset": "example2", "omega": 0.0, "gamma": [1.0, 1.0, 1.0]}, "classical-compatible"),
    ({"preset": "example3", "gamma": [1.0, 2.0, 3.0]}, "classical-compatible"),
])
def test_c04_witness_verdicts(tmp_path, capsys, generator, expected):
    for strategy in STRATEGIES:
        config = tmp_path / "c.json"
        config.write_text(json.dumps({
            "dimension": 2,
            "quorum": {"type": "pauli", "weights": [1 / 3, 1 / 3, 1 / 3]},
            "generator": generator,
            "strategy": strategy,
        }))
        assert cli_main(["witness", "--config", str(config)]) == 0
        last = capsys.readouterr().out.strip().splitlines()[-1]
        assert last == f"VERDICT: {expected}"
    print(f"ACCEPTANCE 4: PASS - {generator.get('preset')} -> {expected} (exact VERDICT line, both strategies)")


@pytest.mark.acceptance
def test_c05_random_unitary_closed_form():
    rng = np.random.default_rng(105)
    g = (0.7, 1.1, 0.4)
    gen, _ = example3(*g)

    def mixing_weights(t):
        a12 = np.exp(-2.0 * (g[0] + g[1]) * t)
        a13 = np.exp(-2.0 * (g[0] + g[2]) * t)
        a23 = np.exp(-2.0 * (g[1] + g[2]) * t)
        return 0.25 * np.array([
            1 + a12 + a13 + a23,
            1 - a12 - a13 + a23,
            1 - a12 + a13 - a23,
            1 + a12 - a13 - a23,
        ])

    worst = 0.0
    for _ in range(20):
        rho = random_density_matrix(2, rng)
        for t in (0.0, 0.3, 1.0, 3.0):
            weights = mixing_weights(t)
            assert abs(weights.sum() - 1.0) < 1e-12 and np.min(weights) >= 0
            expected = sum(
                w * sigma @ rho @ sigma for w, sigma in zip(weights, PAULIS_WITH_IDENTITY)
            )
            worst = max(worst, float(np.max(np.abs(evolve_density(gen, rho, t) - expected))))
    assert worst <= 1e-9
    print(f"ACCEPTANCE 5: PASS - example3 matches the Pauli mixing closed form (max err {worst:.2e})")


@pytest.mark.acceptance
def test_c06_commuting_square():
    rng = np.random.default_rng(106)
    quorum = pauli_quorum()
    cases = [example1(1.3), example2(0.8, 1.0, 0.4, 0.2), example3(0.5, 1.0, 1.5)]
    cases += [(random_gksl(2, rng), quorum) for _ in range(50)]
    worst = 0.0
    for k, (gen, q) in enumerate(cases):
        states = [random_density_matrix(2, rng) for _ in range(10)]
        for strategy in STRATEGIES:
            lifted = lift_generator(gen, q, strategy)
            grid = np.logspace(-3, 1, 12) / max(lifted.norm1(), 1e-6)
            error = consistency_check(gen, q, strategy, states, grid)
            assert error <= 1e-8, f"case {k} ({strategy}): {error:.3e}"
            worst = max(worst, error)
    print(f"ACCEPTANCE 6: PASS - commuting square holds for presets + 50 random generators (max err {worst:.2e})")


@pytest.mark.acceptance
def test_c07_roundtrip_and_subset_geometry():
    rng = np.random.default_rng(107)
    quorum2 = pauli_quorum()
    quorum3 = random_quorum(3, rng)
    for _ in range(100):
        rho = random_density_matrix(2, rng)
        assert np.max(np.abs(decode(encode(rho, quorum2), quorum2) - rho)) <= 1e-10
        rho3 = random_density_matrix(3, rng)
        assert np.max(np.abs(decode(encode(rho3, quorum3), quorum3) - rho3)) <= 1e-10
    weights = quorum2.weights
    for _ in range(50):
        pure = random_pure_density(2, rng)
        value = ellipsoid_membership(encode(pure, quorum2), weights)
        assert abs(value - 1.0) <= 1e-9
        mixed = 0.8 * random_density_matrix(2, rng) + 0.2 * np.eye(2) / 2.0
        assert np.min(np.linalg.eigvalsh(mixed)) >= 0.05
        assert ellipsoid_membership(encode(mixed, quorum2), weights) < 1.0
    print("ACCEPTANCE 7: PASS - 200 round trips at 1e-10; pure states on the ellipsoid, mixed inside")


@pytest.mark.acceptance
def test_c08_hamiltonian_never_kolmogorov():
    quorum = pauli_quorum()
    for seed in range(100):
        rng = np.random.default_rng(10_000 + seed)
        h = random_traceless_hermitian(2, rng)
        norm = np.linalg.norm(h)
        if norm < 0.1:
            h = h * (0.2 / norm)
        gen = GkslGenerator(hamiltonian=h)
        for strategy in STRATEGIES:
            lifted = lift_generator(gen, quorum, strategy)
            assert not is_kolmogorov(lifted.matrix).verdict, f"seed {seed} ({strategy})"
    print("ACCEPTANCE 8: PASS - 100 nontrivial Hamiltonians never lift to Kolmogorov form")


@pytest.mark.acceptance
def test_c09_block_equivalence():
    rng = np.random.default_rng(109)
    quorum = pauli_quorum()
    cases = [example1(1.0), example2(0.0, 1.0, 1.0, 0.7), example2(1.0, 0.5, 0.5, 0.5),
             example3(1.0, 2.0, 3.0)]
    cases += [(random_gksl(2, rng), quorum) for _ in range(50)]
    premise_hits = 0
    for gen, q in cases:
        for strategy in STRATEGIES:
            report = witness(gen, q, strategy)
            if report.kolmogorov and report.stochastic_on_grid:
                premise_hits += 1
                assert report.block_diagonal
                assert all(report.block_kolmogorov)
    assert premise_hits >= 2  # the dissipative presets realize the premise
    # converse: block-diagonal Kolmogorov generators stay stochastic on the grid
    for _ in range(50):
        m = np.zeros((6, 6))
        for a in range(3):
            m[2 * a:2 * a + 2, 2 * a:2 * a + 2] = generator_from_rates(random_rates(2, rng))
        norm = max(float(np.max(np.sum(np.abs(m), axis=0))), 1e-6)
        for t in np.concatenate([[0.0], np.logspace(-3, 1, 12) / norm]):
            assert is_stochastic(matrix_exponential(m, t), tol=1e-9).verdict
    print("ACCEPTANCE 9: PASS - stochastic+Kolmogorov lifts are block-diagonal; block-Kolmogorov implies stochastic")


@pytest.mark.acceptance
def test_c10_classical_suite():
    for seed in range(100):
        rng = np.random.default_rng(20_000 + seed)
        n = int(rng.integers(2, 7))
        m = generator_from_rates(random_rates(n, rng, scale=2.0))
        for t in (0.1, 1.0, 10.0):
            assert is_stochastic(matrix_exponential(m, t), tol=1e-9).verdict, f"seed {seed}"
    for seed in range(100):
        rng = np.random.default_rng(30_000 + seed)
        n = int(rng.integers(2, 7))
        m = rng.uniform(-1.0, 1.0, size=(n, n))
        np.fill_diagonal(m, 0.0)
        off = m + np.where(np.eye(n, dtype=bool), np.inf, 0.0)
        if np.min(off) > -0.05:
            i = int(rng.integers(n))
            j = (i + 1) % n
            m[i, j] = -0.3
        np.fill_diagonal(m, -np.sum(m, axis=0))
        norm = float(np.max(np.sum(np.abs(m), axis=0)))
        grid = np.logspace(-3, 1, 12) / norm
        violated = any(
            not is_stochastic(matrix_exponential(m, t), tol=1e-9).verdict for t in grid
        )
        assert violated, f"seed {seed}: no violation found on the grid"
    print("ACCEPTANCE 10: PASS - Kolmogorov semigroups stay stochastic; negative off-diagonals break it on the grid")


@pytest.mark.acceptance
def test_c11_diagonal_projections():
    from tomowitness import diagonal_projection_generator, diagonal_projection_map

    for seed in range(100):
        rng = np.random.default_rng(40_000 + seed)
        dim = int(rng.integers(2, 4))
        gen = random_gksl(dim, rng)
        m = diagonal_projection_generator(gen)
        assert is_kolmogorov(m, tol=1e-9).verdict, f"seed {seed}"
        for t in (0.1, 1.0, 10.0):
            assert is_stochastic(diagonal_projection_map(gen, t), tol=1e-9).verdict, f"seed {seed}"
    print("ACCEPTANCE 11: PASS - 100 diagonal projections satisfy Kolmogorov/stochastic conditions at 1e-9")
