"""Command-line entry point. Every subcommand except ``parse`` prints a JSON report.

Exit codes:
  0  success
  2  usage error (unknown subcommand or flag, bad flag value)
  3  input file not found or unreadable
  4  Hamiltonian parse error
  5  qubit count over the dense-oracle limit (--max-qubits)
  6  invalid input (angle count, qubit order, model parameters, ...)
"""
from __future__ import annotations

import argparse
import sys

from . import chsh as chsh_mod
from .exact import DEFAULT_MAX_QUBITS, ResourceGuardError, ground_energy
from .gauge import parse_angles
from .hamio import MODEL_KINDS, HamiltonianParseError, ModelSpec, build_model, read_hamiltonian, serialize_hamiltonian
from .optimizer import OptimizerConfig, optimize
from .pauli import PauliError, PauliSum
from .report import Report
from .sequential import sweep
from .stabilizer import gauged_energy, greedy_select, stabilizer_energy

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FILE = 3
EXIT_PARSE = 4
EXIT_GUARD = 5
EXIT_INVALID = 6


class UsageError(Exception):
    pass


def _parse_edges(text: str) -> tuple[tuple[int, int], ...]:
    edges = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        a, sep, b = tok.partition("-")
        if not sep:
            raise argparse.ArgumentTypeError(f"edge {tok!r} is not of the form i-j")
        edges.append((int(a), int(b)))
    return tuple(edges)


def _parse_order(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad qubit order {text!r}") from None


def _angles_arg(text: str):
    try:
        return parse_angles(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabgauge",
        description="Gauged stabilizer approximations of qubit Hamiltonian ground states.",
        epilog="exit codes: 0 ok, 2 usage, 3 file not found, 4 parse error, "
        "5 qubit limit exceeded, 6 invalid input",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--model", choices=MODEL_KINDS)
    src.add_argument("--file", help="Hamiltonian text file")
    common.add_argument("--n", type=int, default=2, help="ising: number of sites")
    common.add_argument("--edges", type=_parse_edges, default=None, help="ising: e.g. 1-2,2-3 (default open chain)")
    common.add_argument("--J", type=float, default=0.0, help="ising: ZZ coupling")
    common.add_argument("--gx", type=float, default=1.0, help="ising: transverse field")
    common.add_argument("--gz", type=float, default=1.0, help="ising: longitudinal field")
    common.add_argument("--max-qubits", type=int, default=DEFAULT_MAX_QUBITS, help="dense-oracle qubit limit")
    common.add_argument("--no-exact", action="store_true", help="skip the exact ground energy")

    sub.add_parser("parse", parents=[common], help="print the canonical Hamiltonian")
    sub.add_parser("exact", parents=[common], help="exact ground energy")
    p = sub.add_parser("stab", parents=[common], help="greedy stabilizer energy")
    p.add_argument("--max-k", type=int, default=None)
    p = sub.add_parser("gauge", parents=[common], help="greedy energy in a fixed gauge")
    p.add_argument("--angles", type=_angles_arg, required=True, help="comma list, e.g. 0,pi/4")
    p.add_argument("--max-k", type=int, default=None)
    p = sub.add_parser("sweep", parents=[common], help="qubit-by-qubit gauging")
    p.add_argument("--mode", choices=("fixed_pi4", "analytic"), default="fixed_pi4")
    p.add_argument("--order", type=_parse_order, default=None, help="comma list of 1-based qubits")
    p = sub.add_parser("optimize", parents=[common], help="optimize continuous gauge angles")
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sweeps", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-10, help="energy tolerance per sweep")

    p = sub.add_parser("chsh", help="CHSH game values and its Hamiltonian")
    p.add_argument("--max-qubits", type=int, default=DEFAULT_MAX_QUBITS)
    return parser


def _load(args) -> tuple[PauliSum, dict]:
    if args.file is not None:
        return read_hamiltonian(args.file), {"file": args.file}
    spec = ModelSpec(args.model, n=args.n, edges=args.edges, J=args.J, g_x=args.gx, g_z=args.gz)
    return build_model(spec), {"model": spec.to_dict()}


def _exact(h: PauliSum, args) -> float | None:
    if args.no_exact or h.n > args.max_qubits:
        return None
    return ground_energy(h, args.max_qubits)


def _run(args) -> str:
    if args.command == "chsh":
        return _run_chsh(args).to_json()
    h, config = _load(args)
    if args.command == "parse":
        return serialize_hamiltonian(h)
    if args.command == "exact":
        e = ground_energy(h, args.max_qubits)
        return Report("exact", e, exact_energy=e, config=config).to_json()

    if args.command == "stab":
        max_k = h.n if args.max_k is None else args.max_k
        config["max_k"] = max_k
        rejected: list = []
        s = greedy_select(h, max_k, rejected)
        rep = Report("stab", stabilizer_energy(h, s), stabilizers=s.labels(), config=config)
        if rejected:
            rep.extra["skipped_conflicting"] = [str(g) for g, _ in rejected]
    elif args.command == "gauge":
        if len(args.angles) != h.n:
            raise ValueError(f"{len(args.angles)} angles given for {h.n} qubits")
        max_k = h.n if args.max_k is None else args.max_k
        config["max_k"] = max_k
        e, s, rotated = gauged_energy(h, args.angles, max_k)
        rep = Report("gauge_fixed", e, angles=args.angles, stabilizers=s.labels(), config=config)
        rep.extra["rotated_hamiltonian"] = [[t.coeff, t.string.label] for t in rotated.terms]
    elif args.command == "sweep":
        trace = sweep(h, args.mode, args.order)
        config.update(mode=args.mode, order=args.order or list(range(1, h.n + 1)))
        method = "sweep_pi4" if args.mode == "fixed_pi4" else "sweep_analytic"
        rep = Report(
            method,
            trace.final_energy,
            angles=trace.angles(h.n),
            stabilizers=trace.stabilizers(h.n).labels(),
            trace=trace.to_dict(),
            config=config,
        )
    elif args.command == "optimize":
        cfg = OptimizerConfig(restarts=args.restarts, seed=args.seed, max_sweeps=args.sweeps, energy_tol=args.tol)
        res = optimize(h, cfg)
        config.update(cfg.to_dict())
        rep = Report("optimize", res.energy, angles=res.angles, stabilizers=res.stabilizers.labels(), config=config)
        rep.extra.update(converged=res.converged, restart_index=res.restart_index)
    else:  # pragma: no cover - argparse rejects unknown commands
        raise UsageError(args.command)
    rep.exact_energy = _exact(h, args)
    return rep.to_json()


def _run_chsh(args) -> Report:
    rule = chsh_mod.CHSH
    beta_c = chsh_mod.classical_bias(rule)
    beta_q = chsh_mod.quantum_bias(rule, chsh_mod.QuantumStrategy.standard())
    h0 = chsh_mod.game_to_hamiltonian(rule)
    s = greedy_select(h0)
    rep = Report(
        "chsh",
        stabilizer_energy(h0, s),
        stabilizers=s.labels(),
        exact_energy=ground_energy(h0, args.max_qubits),
        config={"rule": [list(r) for r in rule.table]},
    )
    rep.extra.update(
        classical_bias=f"{beta_c.numerator}/{beta_c.denominator}",
        classical_win=chsh_mod.winning_probability(float(beta_c)),
        quantum_bias=beta_q,
        quantum_win=chsh_mod.winning_probability(beta_q),
        hamiltonian=serialize_hamiltonian(h0),
    )
    return rep


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        out = _run(args)
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"stabgauge: cannot read input: {exc}", file=sys.stderr)
        return EXIT_FILE
    except HamiltonianParseError as exc:
        print(f"stabgauge: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceGuardError as exc:
        print(f"stabgauge: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, PauliError) as exc:
        print(f"stabgauge: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
