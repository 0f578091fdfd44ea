"""Command-line front end.

Subcommands: encode, decode, lift, witness, evolve, example.  Configuration
and state files are JSON with complex numbers written as two-element arrays
``[re, im]``; trajectories are CSV.  Summary lines use fixed prefixes so CI
can grep them; the witness summary always ends with a ``VERDICT:`` line.

Exit codes: 0 success, 2 malformed config/state (message carries the field
path), 3 violated numeric invariant.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import lift as lift_mod
from . import linalg
from .exceptions import ConfigError, TomowitnessError
from .presets import EXAMPLE1_COUPLING_NOTE, PRESETS
from .quantum import (
    GkslGenerator,
    apply_propagator,
    bloch_to_density,
    check_density_matrix,
    liouvillian_matrix,
)
from .sampling import random_density_matrix
from .tomography import (
    Quorum,
    decode,
    encode,
    encode_hermitian,
    in_quantum_subset,
    pauli_quorum,
    sector_labels,
)

DEFAULT_TOL = 1e-9
DEFAULT_SEED = 0
N_CONSISTENCY_STATES = 20


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


# ---------------------------------------------------------------------------
# config parsing (field-path-anchored errors)
# ---------------------------------------------------------------------------


def _load_json(path: str, what: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except FileNotFoundError:
        raise ConfigError(f"{what} file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{what} {path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{what} {path}: top level must be an object")
    return data


def _require(obj: dict, key: str, path: str):
    if key not in obj:
        raise ConfigError(f"{path}{key}: missing required field")
    return obj[key]


def _as_float(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}: expected a number, got {value!r}")
    return float(value)


def _as_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}: expected an integer, got {value!r}")
    return value


def _as_complex(value, path: str) -> complex:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if isinstance(value, list) and len(value) == 2:
        return complex(_as_float(value[0], f"{path}[0]"), _as_float(value[1], f"{path}[1]"))
    raise ConfigError(f"{path}: expected a number or [re, im] pair, got {value!r}")


def _as_complex_matrix(value, path: str) -> np.ndarray:
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{path}: expected a nonempty list of rows")
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or not row:
            raise ConfigError(f"{path}[{i}]: expected a nonempty row")
        rows.append([_as_complex(entry, f"{path}[{i}][{j}]") for j, entry in enumerate(row)])
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ConfigError(f"{path}: rows have inconsistent lengths {sorted(widths)}")
    return np.array(rows, dtype=complex)


def _as_float_list(value, path: str) -> list[float]:
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{path}: expected a nonempty list of numbers")
    return [_as_float(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _parse_quorum(spec, dimension: int, path: str) -> Quorum:
    if not isinstance(spec, dict):
        raise ConfigError(f"{path}: expected an object")
    kind = spec.get("type", "pauli")
    if kind == "pauli":
        if dimension != 2:
            raise ConfigError(f"{path}.type: pauli quorum requires dimension 2, got {dimension}")
        weights = _as_float_list(spec.get("weights", [1 / 3, 1 / 3, 1 / 3]), f"{path}.weights")
        if len(weights) != 3:
            raise ConfigError(f"{path}.weights: pauli quorum needs 3 weights, got {len(weights)}")
        if min(weights) <= 0 or abs(sum(weights) - 1.0) > 1e-12:
            raise ConfigError(
                f"{path}.weights: must be strictly positive and sum to 1, got {weights}"
            )
        return pauli_quorum(weights)
    if kind == "explicit":
        bases_spec = _require(spec, "bases", f"{path}.")
        if not isinstance(bases_spec, list) or not bases_spec:
            raise ConfigError(f"{path}.bases: expected a nonempty list of bases")
        bases = tuple(
            _as_complex_matrix(b, f"{path}.bases[{k}]") for k, b in enumerate(bases_spec)
        )
        weights = _as_float_list(_require(spec, "weights", f"{path}."), f"{path}.weights")
        if len(weights) != len(bases):
            raise ConfigError(
                f"{path}.weights: {len(weights)} weights for {len(bases)} bases"
            )
        if min(weights) <= 0 or abs(sum(weights) - 1.0) > 1e-12:
            raise ConfigError(
                f"{path}.weights: must be strictly positive and sum to 1, got {weights}"
            )
        for k, b in enumerate(bases):
            if b.shape != (dimension, dimension):
                raise ConfigError(
                    f"{path}.bases[{k}]: expected {dimension}x{dimension}, got {b.shape}"
                )
        return Quorum(bases=bases, weights=np.asarray(weights))
    raise ConfigError(f"{path}.type: unknown quorum type {kind!r} (use 'pauli' or 'explicit')")


def _parse_generator(spec, dimension: int, path: str) -> tuple[GkslGenerator, str | None, dict]:
    """Returns (generator, preset name or None, normalized echo)."""
    if not isinstance(spec, dict):
        raise ConfigError(f"{path}: expected an object")
    if "preset" in spec:
        name = spec["preset"]
        if name not in PRESETS:
            raise ConfigError(
                f"{path}.preset: unknown preset {name!r} (choose from {sorted(PRESETS)})"
            )
        if dimension != 2:
            raise ConfigError(f"{path}.preset: presets are qubit models, dimension must be 2")
        gamma = _as_float_list(spec.get("gamma", [0.0, 0.0, 0.0]), f"{path}.gamma")
        if len(gamma) != 3:
            raise ConfigError(f"{path}.gamma: expected 3 rates, got {len(gamma)}")
        if min(gamma) < 0:
            raise ConfigError(f"{path}.gamma: rates must be nonnegative, got {gamma}")
        omega = _as_float(spec.get("omega", 0.0), f"{path}.omega")
        if name == "example1":
            gen, _ = PRESETS[name](omega)
        elif name == "example2":
            gen, _ = PRESETS[name](omega, *gamma)
        else:
            gen, _ = PRESETS[name](*gamma)
        echo = {"preset": name, "omega": omega, "gamma": gamma}
        return gen, name, echo
    hamiltonian = _as_complex_matrix(_require(spec, "hamiltonian", f"{path}."), f"{path}.hamiltonian")
    if hamiltonian.shape != (dimension, dimension):
        raise ConfigError(
            f"{path}.hamiltonian: expected {dimension}x{dimension}, got {hamiltonian.shape}"
        )
    jumps_spec = spec.get("jumps", [])
    if not isinstance(jumps_spec, list):
        raise ConfigError(f"{path}.jumps: expected a list of matrices")
    jumps = tuple(
        _as_complex_matrix(v, f"{path}.jumps[{k}]") for k, v in enumerate(jumps_spec)
    )
    for k, v in enumerate(jumps):
        if v.shape != (dimension, dimension):
            raise ConfigError(f"{path}.jumps[{k}]: expected {dimension}x{dimension}, got {v.shape}")
    try:
        gen = GkslGenerator(hamiltonian=hamiltonian, jumps=jumps)
    except TomowitnessError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    echo = {
        "hamiltonian": _matrix_to_json(hamiltonian),
        "jumps": [_matrix_to_json(v) for v in jumps],
    }
    return gen, None, echo


def _parse_time_grid(spec, path: str):
    """Returns (grid array or None, echo).  None means 'use the default grid'."""
    if spec is None:
        return None, None
    if isinstance(spec, list):
        points = _as_float_list(spec, path)
        if min(points) < 0:
            raise ConfigError(f"{path}: times must be nonnegative")
        return np.array(sorted(points)), {"points": sorted(points)}
    if isinstance(spec, dict):
        if "points" in spec:
            points = _as_float_list(spec["points"], f"{path}.points")
            if min(points) < 0:
                raise ConfigError(f"{path}.points: times must be nonnegative")
            return np.array(sorted(points)), {"points": sorted(points)}
        start = _as_float(_require(spec, "start", f"{path}."), f"{path}.start")
        stop = _as_float(_require(spec, "stop", f"{path}."), f"{path}.stop")
        num = _as_int(spec.get("num", 12), f"{path}.num")
        if start <= 0 or stop <= start or num < 2:
            raise ConfigError(f"{path}: need 0 < start < stop and num >= 2")
        grid = np.concatenate([[0.0], np.logspace(np.log10(start), np.log10(stop), num)])
        return grid, {"start": start, "stop": stop, "num": num}
    raise ConfigError(f"{path}: expected a list of times or a log-range object")


class ResolvedConfig:
    def __init__(self, raw: dict, args):
        self.dimension = _as_int(_require(raw, "dimension", ""), "dimension")
        if self.dimension < 2:
            raise ConfigError(f"dimension: must be >= 2, got {self.dimension}")
        self.quorum = _parse_quorum(raw.get("quorum", {"type": "pauli"}), self.dimension, "quorum")
        if "generator" in raw:
            self._generator, self.preset, self.generator_echo = _parse_generator(
                raw["generator"], self.dimension, "generator"
            )
        else:
            self._generator, self.preset, self.generator_echo = None, None, None
        self.time_grid, self.time_grid_echo = _parse_time_grid(raw.get("time_grid"), "time_grid")
        tol = raw.get("tolerance", DEFAULT_TOL)
        self.tolerance = _as_float(tol, "tolerance")
        if args.tol is not None:
            self.tolerance = args.tol
        strategy = raw.get("strategy", "pseudoinverse")
        if args.strategy is not None:
            strategy = args.strategy
        if strategy not in lift_mod.STRATEGIES:
            raise ConfigError(f"strategy: unknown strategy {strategy!r}")
        self.strategy = strategy
        seed = raw.get("seed", DEFAULT_SEED)
        self.seed = _as_int(seed, "seed")
        if args.seed is not None:
            self.seed = args.seed

    @property
    def generator(self) -> GkslGenerator:
        if self._generator is None:
            raise ConfigError("generator: missing required field")
        return self._generator

    def echo(self) -> dict:
        return {
            "dimension": self.dimension,
            "quorum": {
                "weights": self.quorum.weights.tolist(),
                "sectors": sector_labels(self.quorum),
            },
            "generator": self.generator_echo,
            "time_grid": self.time_grid_echo,
            "tolerance": self.tolerance,
            "strategy": self.strategy,
            "seed": self.seed,
        }


def _load_state(path: str, dimension: int) -> np.ndarray:
    data = _load_json(path, "state")
    if "density_matrix" in data:
        rho = _as_complex_matrix(data["density_matrix"], "density_matrix")
        if rho.shape != (dimension, dimension):
            raise ConfigError(
                f"density_matrix: expected {dimension}x{dimension}, got {rho.shape}"
            )
        return check_density_matrix(rho)
    if "bloch" in data:
        vec = _as_float_list(data["bloch"], "bloch")
        if len(vec) != 3:
            raise ConfigError(f"bloch: expected 3 components, got {len(vec)}")
        if dimension != 2:
            raise ConfigError("bloch: Bloch states require dimension 2")
        return bloch_to_density(np.array(vec))
    raise ConfigError("state file must contain 'density_matrix' or 'bloch'")


def _load_probability_vector(path: str) -> np.ndarray:
    data = _load_json(path, "state")
    if "probability_vector" not in data:
        raise ConfigError("state file must contain 'probability_vector' for decode")
    return np.array(_as_float_list(data["probability_vector"], "probability_vector"))


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------


def _matrix_to_json(matrix: np.ndarray):
    matrix = np.asarray(matrix)
    if np.iscomplexobj(matrix):
        return [[[float(e.real), float(e.imag)] for e in row] for row in matrix]
    return [[float(e) for e in row] for row in matrix]


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")


def _print_matrix(matrix: np.ndarray, indent: str = "  ") -> None:
    matrix = np.asarray(matrix)
    if np.iscomplexobj(matrix):
        def show(v):
            return f"{v.real: .9g}{v.imag:+.9g}j"
    else:
        def show(v):
            return f"{float(v): .9g}"
    for row in matrix:
        print(indent + "[" + ", ".join(show(v) for v in row) + "]")


def _print_vector_line(label: str, values: np.ndarray) -> None:
    print(f"{label}: (" + ", ".join(_fmt(v) for v in values) + ")")


def _print_sectors(p: np.ndarray, quorum: Quorum) -> None:
    labels = sector_labels(quorum)
    n = quorum.dim
    for a, label in enumerate(labels):
        chunk = ", ".join(_fmt(v) for v in p[a * n:(a + 1) * n])
        print(f"SECTOR {label} weight {_fmt(quorum.weights[a])}: {chunk}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_encode(config: ResolvedConfig, args) -> int:
    if args.state is None:
        raise ConfigError("encode requires --state")
    rho = _load_state(args.state, config.dimension)
    p = encode(rho, config.quorum)
    _print_vector_line("P", p)
    _print_sectors(p, config.quorum)
    if args.out:
        _write_json(args.out, {
            "probability_vector": [float(v) for v in p],
            "sector_labels": sector_labels(config.quorum),
            "weights": config.quorum.weights.tolist(),
        })
        print(f"WROTE: {args.out}")
    return 0


def _cmd_decode(config: ResolvedConfig, args) -> int:
    if args.state is None:
        raise ConfigError("decode requires --state")
    p = _load_probability_vector(args.state)
    rho = decode(p, config.quorum)
    member, min_eig = in_quantum_subset(p, config.quorum, tol=config.tolerance)
    print("RHO:")
    _print_matrix(rho)
    print(f"MIN-EIGENVALUE: {_fmt(min_eig)}")
    print(f"IN-QUANTUM-SUBSET: {'true' if member else 'false'}")
    if args.out:
        _write_json(args.out, {
            "density_matrix": _matrix_to_json(rho),
            "min_eigenvalue": float(min_eig),
            "in_quantum_subset": bool(member),
        })
        print(f"WROTE: {args.out}")
    return 0


def _print_lift_notes(preset: str | None) -> None:
    if preset == "example1":
        print(EXAMPLE1_COUPLING_NOTE)


def _cmd_lift(config: ResolvedConfig, args) -> int:
    generator = lift_mod.lift_generator(config.generator, config.quorum, config.strategy)
    print(f"STRATEGY: {config.strategy}")
    print("GENERATOR-MATRIX:")
    _print_matrix(generator.matrix)
    _print_lift_notes(config.preset)
    if args.out:
        _write_json(args.out, {
            "config": config.echo(),
            "strategy": config.strategy,
            "matrix": _matrix_to_json(generator.matrix),
        })
        print(f"WROTE: {args.out}")
    return 0


def _witness_payload(config: ResolvedConfig, report, consistency: float,
                     subset_verdicts: list) -> dict:
    selected = sorted({float(report.time_grid[0]),
                       float(report.time_grid[len(report.time_grid) // 2]),
                       float(report.time_grid[-1])})
    return {
        "config": config.echo(),
        "strategy": report.strategy,
        "time_grid": [float(t) for t in report.time_grid],
        "kolmogorov": {
            "verdict": report.kolmogorov,
            "worst_offdiagonal": report.worst_offdiagonal,
            "worst_offdiagonal_index": list(report.worst_offdiagonal_index),
            "max_column_sum": report.max_column_sum,
        },
        "stochastic_on_grid": {
            "verdict": report.stochastic_on_grid,
            "min_entry": report.min_map_entry,
            "at": {
                "t": report.min_map_entry_at[0],
                "row": report.min_map_entry_at[1],
                "col": report.min_map_entry_at[2],
            },
        },
        "block_structure": {
            "verdict": report.block_diagonal,
            "off_block_mass": report.off_block_mass,
            "per_block_kolmogorov": list(report.block_kolmogorov),
        },
        "block_equivalence_held": report.block_equivalence_held,
        "strategy_disagreement": report.strategy_disagreement,
        "consistency_max_error": consistency,
        "quantum_subset": subset_verdicts,
        "matrices": {
            "generator": _matrix_to_json(report.generator.matrix),
            "maps": [
                {"t": t, "matrix": _matrix_to_json(lift_mod.lift_map(report.generator, t))}
                for t in selected
            ],
        },
        "notes": [EXAMPLE1_COUPLING_NOTE] if config.preset == "example1" else [],
        "verdict": report.verdict,
    }


def _cmd_witness(config: ResolvedConfig, args) -> int:
    report = lift_mod.witness(
        config.generator, config.quorum, strategy=config.strategy,
        grid=config.time_grid, tol=config.tolerance,
    )
    rng = np.random.default_rng(config.seed)
    states = [random_density_matrix(config.dimension, rng) for _ in range(N_CONSISTENCY_STATES)]
    consistency = lift_mod.consistency_check(
        config.generator, config.quorum, config.strategy, states, report.time_grid
    )
    subset_verdicts = []
    if args.state is not None:
        rho = _load_state(args.state, config.dimension)
        member, min_eig = in_quantum_subset(encode(rho, config.quorum), config.quorum,
                                            tol=config.tolerance)
        subset_verdicts.append({"member": bool(member), "min_eigenvalue": float(min_eig)})

    print(f"STRATEGY: {report.strategy}")
    print("TIME-GRID: " + ", ".join(_fmt(t) for t in report.time_grid))
    print(
        f"KOLMOGOROV: {'true' if report.kolmogorov else 'false'} "
        f"(worst off-diagonal {_fmt(report.worst_offdiagonal)} at {report.worst_offdiagonal_index}, "
        f"max column sum {_fmt(report.max_column_sum)})"
    )
    t_at, i_at, j_at = report.min_map_entry_at
    print(
        f"STOCHASTIC-ON-GRID: {'true' if report.stochastic_on_grid else 'false'} "
        f"(min entry {_fmt(report.min_map_entry)} at t={_fmt(t_at)}, ({i_at},{j_at}))"
    )
    print(
        f"BLOCK-DIAGONAL: {'true' if report.block_diagonal else 'false'} "
        f"(off-block mass {_fmt(report.off_block_mass)})"
    )
    for k, ok in enumerate(report.block_kolmogorov, start=1):
        print(f"BLOCK {k} KOLMOGOROV: {'true' if ok else 'false'}")
    print(f"BLOCK-EQUIVALENCE: {'held' if report.block_equivalence_held else 'failed'}")
    if report.strategy_disagreement is None:
        print("STRATEGY-DISAGREEMENT: not-applicable")
    else:
        print(f"STRATEGY-DISAGREEMENT: {'yes' if report.strategy_disagreement else 'none'}")
    print(f"CONSISTENCY: max error {_fmt(consistency)} over {N_CONSISTENCY_STATES} states")
    for entry in subset_verdicts:
        print(
            f"QUANTUM-SUBSET: {'member' if entry['member'] else 'outside'} "
            f"(min eigenvalue {_fmt(entry['min_eigenvalue'])})"
        )
    _print_lift_notes(config.preset)
    if args.out:
        _write_json(args.out, _witness_payload(config, report, consistency, subset_verdicts))
        print(f"WROTE: {args.out}")
    print(f"VERDICT: {report.verdict}")
    return 0


def _cmd_evolve(config: ResolvedConfig, args) -> int:
    if args.state is None:
        raise ConfigError("evolve requires --state")
    rho0 = _load_state(args.state, config.dimension)
    generator = lift_mod.lift_generator(config.generator, config.quorum, config.strategy)
    grid = config.time_grid
    if grid is None:
        grid = lift_mod.default_time_grid(generator)
    grid = np.sort(np.asarray(grid, dtype=float))
    p0 = encode(rho0, config.quorum)
    liouville = liouvillian_matrix(config.generator)

    labels = sector_labels(config.quorum)
    n = config.dimension
    header = ["t"]
    header += [f"p_{a}_{k + 1}" for a in labels for k in range(n)]
    header += ["min_eigenvalue", "in_quantum_subset"]
    rows = []
    rho_rows = []
    worst_gap = 0.0
    for t in grid:
        transfer = lift_mod.lift_map(generator, float(t))
        p_t = transfer @ p0
        rho_t = apply_propagator(linalg.matrix_exponential(liouville, float(t)), rho0)
        gap = float(np.max(np.abs(
            p_t - encode_hermitian(rho_t, config.quorum)
        )))
        worst_gap = max(worst_gap, gap)
        member, min_eig = in_quantum_subset(p_t, config.quorum, tol=config.tolerance)
        rows.append([_fmt(t)] + [_fmt(v) for v in p_t] + [_fmt(min_eig), "1" if member else "0"])
        flat = []
        for i in range(n):
            for j in range(n):
                flat += [_fmt(rho_t[i, j].real), _fmt(rho_t[i, j].imag)]
        rho_rows.append([_fmt(t)] + flat)

    if worst_gap > 1e-8:
        raise TomowitnessError(
            f"probability-vector and density-matrix trajectories diverge: {worst_gap:.3e} > 1e-8"
        )

    out = args.out or "trajectory.csv"
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(",".join(header) + "\n")
        for row in rows:
            handle.write(",".join(row) + "\n")
    rho_header = ["t"]
    for i in range(n):
        for j in range(n):
            rho_header += [f"re_rho_{i + 1}_{j + 1}", f"im_rho_{i + 1}_{j + 1}"]
    rho_out = out.rsplit(".", 1)[0] + "_rho.csv"
    with open(rho_out, "w", encoding="utf-8") as handle:
        handle.write(",".join(rho_header) + "\n")
        for row in rho_rows:
            handle.write(",".join(row) + "\n")
    print(f"TRAJECTORY-AGREEMENT: {_fmt(worst_gap)}")
    print(f"WROTE: {out}")
    print(f"WROTE: {rho_out}")
    return 0


def _cmd_example(args) -> int:
    name = args.name
    if name not in PRESETS:
        print(f"example: unknown preset {name!r} (choose from {sorted(PRESETS)})", file=sys.stderr)
        return 2
    weights = tuple(args.weights) if args.weights else (1 / 3, 1 / 3, 1 / 3)
    if len(weights) != 3 or min(weights) <= 0 or abs(sum(weights) - 1.0) > 1e-12:
        print("example: --weights must be 3 positive numbers summing to 1", file=sys.stderr)
        return 2
    gamma = tuple(args.gamma) if args.gamma else (1.0, 1.0, 1.0)
    if len(gamma) != 3 or min(gamma) < 0:
        print("example: --gamma must be 3 nonnegative rates", file=sys.stderr)
        return 2
    if name == "example1":
        gen, quorum = PRESETS[name](args.omega, weights)
        print(f"PRESET: example1 omega={_fmt(args.omega)}")
    elif name == "example2":
        gen, quorum = PRESETS[name](args.omega, *gamma, weights)
        print(f"PRESET: example2 omega={_fmt(args.omega)} gamma=({', '.join(_fmt(g) for g in gamma)})")
    else:
        gen, quorum = PRESETS[name](*gamma, weights)
        print(f"PRESET: example3 gamma=({', '.join(_fmt(g) for g in gamma)})")
    print(f"WEIGHTS: ({', '.join(_fmt(w) for w in weights)})")
    payload = {"preset": name, "weights": list(weights), "strategies": {}}
    for strategy in lift_mod.STRATEGIES:
        generator = lift_mod.lift_generator(gen, quorum, strategy)
        print(f"STRATEGY {strategy}:")
        _print_matrix(generator.matrix)
        payload["strategies"][strategy] = _matrix_to_json(generator.matrix)
    _print_lift_notes(name)
    if args.out:
        _write_json(args.out, payload)
        print(f"WROTE: {args.out}")
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tomowitness",
        description="Tomographic simplex encoding and quantumness witnesses for finite-level dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_config=True):
        if needs_config:
            p.add_argument("--config", required=True, help="JSON model configuration")
        p.add_argument("--state", help="JSON state file")
        p.add_argument("--out", help="output file path")
        p.add_argument("--strategy", choices=list(lift_mod.STRATEGIES))
        p.add_argument("--tol", type=float)
        p.add_argument("--seed", type=int)

    for name, summary in [
        ("encode", "encode a state as a tomographic probability vector"),
        ("decode", "reconstruct a state from a probability vector"),
        ("lift", "print the lifted simplex generator"),
        ("witness", "classify the dynamics as classical-compatible or quantum-witnessed"),
        ("evolve", "write the probability-vector trajectory as CSV"),
    ]:
        add_common(sub.add_parser(name, help=summary))

    example = sub.add_parser("example", help="print a preset's lifted matrices under both strategies")
    example.add_argument("name", help="example1 | example2 | example3")
    example.add_argument("--omega", type=float, default=1.0)
    example.add_argument("--gamma", type=float, nargs=3)
    example.add_argument("--weights", type=float, nargs=3)
    example.add_argument("--out")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0

    try:
        if args.command == "example":
            return _cmd_example(args)
        config = ResolvedConfig(_load_json(args.config, "config"), args)
        handler = {
            "encode": _cmd_encode,
            "decode": _cmd_decode,
            "lift": _cmd_lift,
            "witness": _cmd_witness,
            "evolve": _cmd_evolve,
        }[args.command]
        return handler(config, args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except TomowitnessError as exc:
        print(f"invariant violation: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # malformed input must never produce a traceback
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
