"""Command-line front end.

Subcommands:
    machine validate|minimize|stationary FILE
    complexity FILE
    sweep --family and|xor --grid N [--raw-topology]
    sample --family and|xor --p P --n N --seed S  (or --input FILE)
    game chsh [--optimize --iters K]
    game ghz

Text reports print 6 decimal places; CSV output carries 12 significant
digits.  Identical invocations produce byte-identical output.  Exit
status: 0 success, 1 domain or contract error, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import math
import sys
from itertools import product

from .errors import ContractViolationError, MachineFormatError
from .games import (BipartiteStrategy, MeasurementBasis, TripartiteProtocol,
                    bell_state, chsh_value, classical_chsh_max,
                    classical_ghz_game_max, ghz_state, optimize_chsh,
                    success_from_chsh)
from .process import (build_and_process, build_xor_process, machine_from_json,
                      machine_to_json, minimize, sample, stationary,
                      statistical_complexity, validate)
from .qmachine import complexity_sweep, quantum_complexity

_FAMILIES = {"and": build_and_process, "xor": build_xor_process}


def _load_machine(path):
    with open(path, encoding="utf-8") as handle:
        return machine_from_json(handle.read())


def _emit(text: str, output):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _machine_for(args):
    if args.input is not None:
        return _load_machine(args.input)
    if args.family is None or args.p is None:
        raise ContractViolationError("need either --input or --family with --p")
    return _FAMILIES[args.family](args.p)


def _cmd_machine(args):
    machine = _load_machine(args.file)
    if args.action == "validate":
        problems = validate(machine)
        if problems:
            return 1, "".join(f"{v}\n" for v in problems)
        return 0, "valid\n"
    if args.action == "minimize":
        return 0, machine_to_json(minimize(machine, tol=args.tol))
    pi = stationary(machine)
    if args.format == "csv":
        lines = ["state,probability"]
        lines += ["%s,%.12g" % (s, w) for s, w in zip(machine.states, pi)]
        return 0, "\n".join(lines) + "\n"
    return 0, "".join("%s %.6f\n" % (s, w) for s, w in zip(machine.states, pi))


def _cmd_complexity(args):
    machine = _load_machine(args.file)
    c_mu = statistical_complexity(minimize(machine))
    c_q = quantum_complexity(machine)
    if args.format == "csv":
        return 0, "c_mu_bits,c_q_qubits\n%.12g,%.12g\n" % (c_mu, c_q)
    return 0, "C_mu = %.6f bits\nC_q = %.6f qubits\n" % (c_mu, c_q)


def _cmd_sweep(args):
    if args.grid < 2:
        raise ContractViolationError("--grid must be at least 2")
    grid = [i / (args.grid - 1) for i in range(args.grid)]
    table = complexity_sweep(args.family, grid, include_raw=args.raw_topology)
    return 0, table.to_csv()


def _cmd_sample(args):
    machine = _machine_for(args)
    sequence = sample(machine, args.n, args.seed)
    if args.format == "csv":
        lines = ["t,symbol"]
        lines += ["%d,%s" % (t, symbol) for t, symbol in enumerate(sequence.symbols)]
        return 0, "\n".join(lines) + "\n"
    joiner = "" if all(len(s) == 1 for s in machine.alphabet) else " "
    return 0, joiner.join(sequence.symbols) + "\n"


def _chsh_report(args):
    if args.optimize:
        start = BipartiteStrategy(
            shared_state=bell_state(),
            alice=(MeasurementBasis(0.0), MeasurementBasis(0.0)),
            bob=(MeasurementBasis(0.0), MeasurementBasis(0.0)))
        result = optimize_chsh(start, iterations=args.iters)
        strategy, outcome = result.strategy, result.outcome
        preamble = [("optimizer_sweeps", result.sweeps),
                    ("optimizer_converged", int(result.converged))]
    else:
        strategy = BipartiteStrategy(
            shared_state=bell_state(),
            alice=(MeasurementBasis(0.0), MeasurementBasis(math.pi / 2)),
            bob=(MeasurementBasis(math.pi / 4), MeasurementBasis(-math.pi / 4)))
        outcome = chsh_value(strategy)
        preamble = []
    classical_c, _ = classical_chsh_max()

    angles = [("alice_angle_0", strategy.alice[0].polar),
              ("alice_angle_1", strategy.alice[1].polar),
              ("bob_angle_0", strategy.bob[0].polar),
              ("bob_angle_1", strategy.bob[1].polar)]
    table = [("p_same_%d%d" % (i, j), outcome.same_outcome[i][j])
             for i, j in product((0, 1), repeat=2)]
    summary = [("chsh", outcome.chsh), ("success", outcome.success),
               ("classical_max_abs_chsh", classical_c),
               ("classical_success", success_from_chsh(classical_c))]

    if args.format == "csv":
        lines = ["quantity,value"]
        for key, value in preamble + angles + table + summary:
            lines.append("%s,%.12g" % (key, value))
        return 0, "\n".join(lines) + "\n"
    lines = ["CHSH report"]
    for key, value in preamble:
        lines.append("%s = %d" % (key, value))
    for key, value in angles + table + summary:
        lines.append("%s = %.6f" % (key, value))
    return 0, "\n".join(lines) + "\n"


def _ghz_report(args):
    protocol = TripartiteProtocol(ghz_state())
    classical_best, _ = classical_ghz_game_max()
    if args.format == "csv":
        lines = ["a,b,m1,m2,m3,probability"]
        for a, b in product((0, 1), repeat=2):
            dist = protocol.round_distribution(a, b)
            for m in range(8):
                lines.append("%d,%d,%d,%d,%d,%.12g"
                             % (a, b, m >> 2 & 1, m >> 1 & 1, m & 1, dist[m]))
        return 0, "\n".join(lines) + "\n"
    lines = ["GHZ report"]
    for a, b in product((0, 1), repeat=2):
        dist = protocol.round_distribution(a, b)
        lines.append("inputs a=%d b=%d: success = %.6f"
                     % (a, b, protocol.round_success(a, b)))
        for m in range(8):
            lines.append("  p[%d%d%d] = %.6f"
                         % (m >> 2 & 1, m >> 1 & 1, m & 1, dist[m]))
    lines.append("average success = %.6f" % protocol.average_success())
    lines.append("classical max success = %.6f" % classical_best)
    return 0, "\n".join(lines) + "\n"


def _cmd_game(args):
    if args.kind == "chsh":
        return _chsh_report(args)
    return _ghz_report(args)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qcomplexity",
        description="Classical and quantum memory costs of stochastic "
                    "processes, and correlation-assisted games.")
    sub = parser.add_subparsers(dest="command", required=True)

    machine = sub.add_parser("machine", help="validate, minimize, or analyze a machine file")
    machine.add_argument("action", choices=("validate", "minimize", "stationary"))
    machine.add_argument("file")
    machine.add_argument("--tol", type=float, default=1e-9,
                         help="state-merge tolerance for minimize")
    machine.add_argument("--format", choices=("text", "csv"), default="text")
    machine.add_argument("--output")
    machine.set_defaults(handler=_cmd_machine)

    complexity = sub.add_parser("complexity", help="report C_mu and C_q of a machine file")
    complexity.add_argument("file")
    complexity.add_argument("--format", choices=("text", "csv"), default="text")
    complexity.add_argument("--output")
    complexity.set_defaults(handler=_cmd_complexity)

    sweep = sub.add_parser("sweep", help="complexity-vs-p CSV for a built-in family")
    sweep.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    sweep.add_argument("--grid", type=int, required=True,
                       help="number of evenly spaced p values including both endpoints")
    sweep.add_argument("--raw-topology", action="store_true",
                       help="add columns for the unminimized 5-state machine")
    sweep.add_argument("--output")
    sweep.set_defaults(handler=_cmd_sweep)

    sampler = sub.add_parser("sample", help="draw a symbol sequence")
    sampler.add_argument("--family", choices=sorted(_FAMILIES))
    sampler.add_argument("--p", type=float)
    sampler.add_argument("--input", help="machine file instead of a built-in family")
    sampler.add_argument("--n", type=int, required=True)
    sampler.add_argument("--seed", type=int, required=True)
    sampler.add_argument("--format", choices=("text", "csv"), default="text")
    sampler.add_argument("--output")
    sampler.set_defaults(handler=_cmd_sample)

    game = sub.add_parser("game", help="evaluate a correlation game")
    game.add_argument("kind", choices=("chsh", "ghz"))
    game.add_argument("--optimize", action="store_true",
                      help="run the angle optimizer from the zero start")
    game.add_argument("--iters", type=int, default=200)
    game.add_argument("--format", choices=("text", "csv"), default="text")
    game.add_argument("--output")
    game.set_defaults(handler=_cmd_game)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        status, text = args.handler(args)
    except MachineFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContractViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
