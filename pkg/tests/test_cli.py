import json

import numpy as np
import pytest

from tomowitness.cli import main

UNIFORM = [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def base_config(**overrides):
    config = {
        "dimension": 2,
        "quorum": {"type": "pauli", "weights": UNIFORM},
        "generator": {"preset": "example3", "gamma": [1.0, 2.0, 3.0]},
        "tolerance": 1e-9,
        "strategy": "sector-local",
        "seed": 3,
    }
    config.update(overrides)
    return config


def ground_state_file(tmp_path):
    return write_json(tmp_path / "state.json", {
        "density_matrix": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
    })


def parse_p_line(output):
    line = next(l for l in output.splitlines() if l.startswith("P: "))
    return np.array([float(v) for v in line[4:-1].split(", ")])


class TestEncode:
    def test_ground_state_prints_sixths(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        code = main(["encode", "--config", config, "--state", ground_state_file(tmp_path)])
        assert code == 0
        p = parse_p_line(capsys.readouterr().out)
        np.testing.assert_allclose(p, [1 / 6, 1 / 6, 1 / 6, 1 / 6, 1 / 3, 0.0], atol=1e-12)

    def test_maximally_mixed_uniform_sixths(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        state = write_json(tmp_path / "s.json", {"bloch": [0.0, 0.0, 0.0]})
        assert main(["encode", "--config", config, "--state", state]) == 0
        p = parse_p_line(capsys.readouterr().out)
        np.testing.assert_allclose(p, np.full(6, 1 / 6), atol=1e-12)

    def test_missing_state_is_config_error(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        assert main(["encode", "--config", config]) == 2

    def test_writes_output_file(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        out = tmp_path / "p.json"
        assert main(["encode", "--config", config, "--state", ground_state_file(tmp_path),
                     "--out", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["sector_labels"] == ["x", "y", "z"]
        np.testing.assert_allclose(payload["probability_vector"],
                                   [1 / 6, 1 / 6, 1 / 6, 1 / 6, 1 / 3, 0.0], atol=1e-12)


class TestConfigErrors:
    def test_bad_weights_exit_2_with_field_path(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config(
            quorum={"type": "pauli", "weights": [0.3, 0.3, 0.3]}
        ))
        assert main(["encode", "--config", config, "--state", ground_state_file(tmp_path)]) == 2
        assert "quorum.weights" in capsys.readouterr().err

    def test_invalid_json_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["witness", "--config", str(bad)]) == 2

    def test_unknown_preset_exit_2(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config(generator={"preset": "example9"}))
        assert main(["witness", "--config", config]) == 2
        assert "generator.preset" in capsys.readouterr().err

    def test_missing_config_file_exit_2(self, capsys):
        assert main(["witness", "--config", "/nonexistent/c.json"]) == 2

    def test_missing_generator_only_fails_commands_that_need_it(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", {"dimension": 2})
        assert main(["encode", "--config", config, "--state", ground_state_file(tmp_path)]) == 0
        assert main(["witness", "--config", config]) == 2
        assert "generator" in capsys.readouterr().err

    def test_unknown_subcommand_exit_2(self, capsys):
        assert main(["transmogrify", "--config", "x"]) == 2


class TestInvariantViolations:
    def test_negative_state_exit_3(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        state = write_json(tmp_path / "s.json", {
            "density_matrix": [[[1.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [-0.5, 0.0]]],
        })
        assert main(["encode", "--config", config, "--state", state]) == 3
        assert "Positivity" in capsys.readouterr().err

    def test_decode_sector_sum_violation_exit_3(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        state = write_json(tmp_path / "s.json", {
            "probability_vector": [0.17, 1 / 6, 1 / 6, 1 / 6, 1 / 3, 0.0],
        })
        assert main(["decode", "--config", config, "--state", state]) == 3
        assert "SectorSum" in capsys.readouterr().err


class TestWitness:
    @pytest.mark.parametrize("generator,expected", [
        ({"preset": "example3", "gamma": [1.0, 2.0, 3.0]}, "classical-compatible"),
        ({"preset": "example1", "omega": 1.0}, "quantum-witnessed"),
        ({"preset": "example1", "omega": -1.0}, "quantum-witnessed"),
        ({"preset": "example2", "omega": 1.0, "gamma": [1.0, 1.0, 1.0]}, "quantum-witnessed"),
        ({"preset": "example2", "omega": 0.0, "gamma": [1.0, 1.0, 1.0]}, "classical-compatible"),
    ])
    def test_verdict_last_line(self, tmp_path, capsys, generator, expected):
        config = write_json(tmp_path / "c.json", base_config(generator=generator))
        assert main(["witness", "--config", config]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[-1] == f"VERDICT: {expected}"

    def test_report_is_deterministic(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config(
            generator={"preset": "example2", "omega": 0.7, "gamma": [0.5, 1.5, 0.2]},
        ))
        out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
        assert main(["witness", "--config", config, "--out", str(out1)]) == 0
        assert main(["witness", "--config", config, "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_report_payload_shape(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        out = tmp_path / "report.json"
        assert main(["witness", "--config", config, "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["verdict"] == "classical-compatible"
        assert report["kolmogorov"]["verdict"] is True
        assert report["block_structure"]["per_block_kolmogorov"] == [True, True, True]
        assert report["consistency_max_error"] <= 1e-8
        assert len(report["matrices"]["generator"]) == 6
        assert report["config"]["seed"] == 3

    def test_example1_note_printed(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config(
            generator={"preset": "example1", "omega": 1.0},
        ))
        assert main(["witness", "--config", config]) == 0
        assert "NOTE:" in capsys.readouterr().out

    def test_state_subset_verdict_included(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        assert main(["witness", "--config", config, "--state", ground_state_file(tmp_path)]) == 0
        assert "QUANTUM-SUBSET: member" in capsys.readouterr().out

    def test_strategy_disagreement_surfaced(self, tmp_path, capsys):
        # population drift (gamma1 != gamma2, omega = 0): the two lift
        # extensions reach opposite verdicts
        config = write_json(tmp_path / "c.json", base_config(
            generator={"preset": "example2", "omega": 0.0, "gamma": [2.0, 0.5, 0.1]},
        ))
        assert main(["witness", "--config", config]) == 0
        out = capsys.readouterr().out
        assert "STRATEGY-DISAGREEMENT: yes" in out
        assert out.strip().splitlines()[-1] == "VERDICT: classical-compatible"


class TestEvolve:
    def test_initial_row_equals_encode(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config(time_grid=[0.0, 0.5, 1.0]))
        out = tmp_path / "traj.csv"
        assert main(["evolve", "--config", config, "--state", ground_state_file(tmp_path),
                     "--out", str(out)]) == 0
        lines = out.read_text().strip().splitlines()
        header = lines[0].split(",")
        assert header[0] == "t" and header[1] == "p_x_1"
        first = [float(v) for v in lines[1].split(",")[:7]]
        np.testing.assert_allclose(first, [0.0, 1 / 6, 1 / 6, 1 / 6, 1 / 6, 1 / 3, 0.0], atol=1e-12)
        assert (tmp_path / "traj_rho.csv").exists()

    def test_example3_relaxes_to_half_weights(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config(time_grid=[0.0, 50.0]))
        out = tmp_path / "traj.csv"
        assert main(["evolve", "--config", config, "--state", ground_state_file(tmp_path),
                     "--out", str(out)]) == 0
        last = [float(v) for v in out.read_text().strip().splitlines()[-1].split(",")[:7]]
        np.testing.assert_allclose(last[1:], np.full(6, 1 / 6), atol=1e-9)

    def test_example1_x_sector_constant(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config(
            generator={"preset": "example1", "omega": 1.0},
            time_grid=[0.0, 0.3, 0.9, 1.7],
        ))
        state = write_json(tmp_path / "s.json", {"bloch": [0.3, 0.5, 0.1]})
        out = tmp_path / "traj.csv"
        assert main(["evolve", "--config", config, "--state", state, "--out", str(out)]) == 0
        rows = [line.split(",") for line in out.read_text().strip().splitlines()[1:]]
        p_x1 = [float(r[1]) for r in rows]
        assert np.max(np.abs(np.diff(p_x1))) <= 1e-10

    def test_agreement_line_printed(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config(time_grid=[0.0, 1.0]))
        assert main(["evolve", "--config", config, "--state", ground_state_file(tmp_path),
                     "--out", str(tmp_path / "t.csv")]) == 0
        assert "TRAJECTORY-AGREEMENT:" in capsys.readouterr().out

    def test_rho_trajectory_starts_at_initial_state(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config(time_grid=[0.0, 1.0]))
        out = tmp_path / "t.csv"
        assert main(["evolve", "--config", config, "--state", ground_state_file(tmp_path),
                     "--out", str(out)]) == 0
        lines = (tmp_path / "t_rho.csv").read_text().strip().splitlines()
        assert lines[0].split(",")[1:3] == ["re_rho_1_1", "im_rho_1_1"]
        first = [float(v) for v in lines[1].split(",")]
        np.testing.assert_allclose(first, [0.0, 1, 0, 0, 0, 0, 0, 0, 0], atol=1e-12)


class TestDecodeAndLift:
    def test_decode_roundtrip(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        state = write_json(tmp_path / "p.json", {
            "probability_vector": [1 / 6, 1 / 6, 1 / 6, 1 / 6, 1 / 3, 0.0],
        })
        out = tmp_path / "rho.json"
        assert main(["decode", "--config", config, "--state", state, "--out", str(out)]) == 0
        payload = json.loads(out.read_text())
        rho = np.array([[complex(re, im) for re, im in row] for row in payload["density_matrix"]])
        np.testing.assert_allclose(rho, np.diag([1.0, 0.0]), atol=1e-10)
        assert payload["in_quantum_subset"] is True

    def test_lift_prints_matrix(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        assert main(["lift", "--config", config]) == 0
        out = capsys.readouterr().out
        assert "GENERATOR-MATRIX:" in out
        assert "STRATEGY: sector-local" in out

    def test_strategy_flag_overrides_config(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        assert main(["lift", "--config", config, "--strategy", "pseudoinverse"]) == 0
        assert "STRATEGY: pseudoinverse" in capsys.readouterr().out


def complex_rows(matrix):
    return [[[float(e.real), float(e.imag)] for e in row] for row in np.asarray(matrix, dtype=complex)]


class TestExplicitQuorum:
    @pytest.fixture
    def qutrit_config(self, tmp_path):
        from tomowitness.sampling import random_gksl, random_unitary

        rng = np.random.default_rng(5)
        bases = [random_unitary(3, rng) for _ in range(4)]
        gen = random_gksl(3, rng)
        return write_json(tmp_path / "q3.json", {
            "dimension": 3,
            "quorum": {"type": "explicit", "bases": [complex_rows(b) for b in bases],
                       "weights": [0.25, 0.25, 0.25, 0.25]},
            "generator": {"hamiltonian": complex_rows(gen.hamiltonian),
                          "jumps": [complex_rows(v) for v in gen.jumps]},
            "strategy": "pseudoinverse",
            "seed": 1,
        })

    def test_qutrit_witness_runs(self, tmp_path, capsys, qutrit_config):
        assert main(["witness", "--config", qutrit_config]) == 0
        out = capsys.readouterr().out
        assert out.strip().splitlines()[-1].startswith("VERDICT: ")
        assert "STRATEGY-DISAGREEMENT: not-applicable" in out

    def test_qutrit_encode_decode_roundtrip(self, tmp_path, capsys, qutrit_config):
        from tomowitness.sampling import random_density_matrix

        rho = random_density_matrix(3, np.random.default_rng(9))
        state = write_json(tmp_path / "s3.json", {"density_matrix": complex_rows(rho)})
        out = tmp_path / "p3.json"
        assert main(["encode", "--config", qutrit_config, "--state", state,
                     "--out", str(out)]) == 0
        p = json.loads(out.read_text())["probability_vector"]
        back = write_json(tmp_path / "back.json", {"probability_vector": p})
        rho_out = tmp_path / "rho3.json"
        assert main(["decode", "--config", qutrit_config, "--state", back,
                     "--out", str(rho_out)]) == 0
        payload = json.loads(rho_out.read_text())
        rebuilt = np.array([[complex(re, im) for re, im in row]
                            for row in payload["density_matrix"]])
        assert np.max(np.abs(rebuilt - rho)) <= 1e-10

    def test_sector_local_unavailable_exit_3(self, tmp_path, capsys, qutrit_config):
        assert main(["witness", "--config", qutrit_config, "--strategy", "sector-local"]) == 3
        assert "StrategyUnavailable" in capsys.readouterr().err


class TestFlagOverrides:
    def test_seed_override_reflected_in_report(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        out = tmp_path / "r.json"
        assert main(["witness", "--config", config, "--out", str(out), "--seed", "99"]) == 0
        assert json.loads(out.read_text())["config"]["seed"] == 99

    def test_tol_override_reflected_in_report(self, tmp_path, capsys):
        config = write_json(tmp_path / "c.json", base_config())
        out = tmp_path / "r.json"
        assert main(["witness", "--config", config, "--out", str(out), "--tol", "1e-7"]) == 0
        assert json.loads(out.read_text())["config"]["tolerance"] == 1e-7


class TestExample:
    def test_unknown_name_exit_2(self, capsys):
        assert main(["example", "example9"]) == 2

    def test_example2_prints_both_strategies(self, capsys):
        assert main(["example", "example2", "--omega", "1.0", "--gamma", "1", "1", "1"]) == 0
        out = capsys.readouterr().out
        assert "STRATEGY pseudoinverse:" in out
        assert "STRATEGY sector-local:" in out

    def test_example1_prints_note(self, capsys):
        assert main(["example", "example1", "--omega", "2.0"]) == 0
        assert "NOTE:" in capsys.readouterr().out
