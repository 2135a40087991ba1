"""Command-line front end: compile problems, verify schedules, report stats.

Exit codes: 0 success / verification passed, 1 malformed input, 2 target
unschedulable on the given resource, 3 verification failed, 4 qubit count
over the dense-verification cap.  Reports go to stdout, diagnostics to
stderr; outputs are byte-identical for identical inputs.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .circuits import circuit_stats
from .compiler import DEFAULT_EPSILON, compile_ata, compile_chain
from .errors import FileFormatError, QubitLimitError, UnschedulableError
from .fileio import (
    ProblemSpec,
    dumps_canonical,
    load_problem,
    load_schedule,
    schedule_document,
    sha256_of_file,
)
from .unitaries import circuit_unitary, exact_target, phase_distance, zz_evolution


def _target_unitary(problem: ProblemSpec, max_qubits: int):
    if problem.target_type == "ata":
        return exact_target(problem.target_graph, problem.t_f, max_qubits)
    angles = {(j, j + 1): phi for j, phi in enumerate(problem.target_angles)}
    return zz_evolution(angles, problem.num_qubits, max_qubits)


def cmd_compile(args: argparse.Namespace) -> int:
    problem = load_problem(args.input)
    try:
        if problem.target_type == "ata":
            result = compile_ata(problem.target_graph, problem.resource, problem.t_f, args.epsilon)
        else:
            result = compile_chain(problem.target_angles, problem.resource, problem.t_f, args.epsilon)
    except UnschedulableError as exc:
        print(f"unschedulable: {exc}", file=sys.stderr)
        return 2
    st = circuit_stats(result.circuit)
    stats = {
        "analog_requests": result.analog_requests,
        "resource_blocks": st.analog_block_count,
        "sqr_gates": st.sqr_count,
        "total_analog_time": st.total_analog_time,
        "reference_request_count": result.reference_request_count,
    }
    doc = schedule_document(
        result.circuit, problem.resource, problem.t_f, stats,
        tool_version=__version__, input_sha256=sha256_of_file(args.input),
    )
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_canonical(doc))
    print(f"compiled {problem.target_type} target on {problem.num_qubits} qubits")
    print(f"analog_requests: {result.analog_requests}")
    print(f"resource_blocks: {st.analog_block_count}")
    print(f"sqr_gates: {st.sqr_count}")
    print(f"total_analog_time: {st.total_analog_time:.17g}")
    if result.reference_request_count is not None:
        print(
            f"reference_request_count: {result.reference_request_count} "
            "(5L-12; assumes merging consecutive swap-layer evolutions, "
            "which this compiler does not apply)"
        )
    print(f"wrote {args.output}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    problem = load_problem(args.input)
    circuit, resource_echo, t_f, _metadata = load_schedule(args.schedule)
    if circuit.num_qubits != problem.num_qubits:
        raise FileFormatError("schedule and problem disagree on num_qubits")
    if resource_echo != problem.resource:
        raise FileFormatError("schedule and problem disagree on resource couplings")
    if t_f != problem.t_f:
        raise FileFormatError("schedule and problem disagree on time")
    if problem.num_qubits > args.max_qubits:
        print(
            f"{problem.num_qubits} qubits exceeds the verification cap of {args.max_qubits}",
            file=sys.stderr,
        )
        return 4
    try:
        target = _target_unitary(problem, args.max_qubits)
        actual = circuit_unitary(circuit, problem.resource, args.max_qubits)
    except QubitLimitError as exc:
        print(str(exc), file=sys.stderr)
        return 4
    report = phase_distance(target, actual)
    passed = report.distance < args.tol
    print(f"distance: {report.distance:.3e}")
    print(f"tolerance: {args.tol:.3e}")
    print("PASS" if passed else "FAIL")
    return 0 if passed else 3


def cmd_stats(args: argparse.Namespace) -> int:
    problem = load_problem(args.input)
    circuit, _resource, _t_f, metadata = load_schedule(args.schedule)
    st = circuit_stats(circuit)
    meta_stats = metadata["stats"]
    reference = meta_stats.get("reference_request_count")
    requests = meta_stats.get("analog_requests")
    lines = {
        "num_qubits": problem.num_qubits,
        "target_type": problem.target_type,
        "resource_blocks": st.analog_block_count,
        "sqr_gates": st.sqr_count,
        "total_analog_time": format(st.total_analog_time, ".17g"),
        "analog_requests": requests,
        "reference_request_count": reference,
    }
    for key, value in lines.items():
        if value is not None:
            print(f"{key}: {value}")
    if reference is not None:
        print(
            "note: reference_request_count is 5L-12, reachable by merging "
            "consecutive swap-layer evolutions; this compiler emits two "
            "requests per swap layer, so analog_requests is larger but O(L)."
        )
    print("---")
    machine = dict(lines)
    machine["total_analog_time"] = st.total_analog_time
    print(dumps_canonical(machine), end="")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="daqcompile",
        description="Compile all-to-all ZZ Ising evolutions onto a fixed chain resource.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compile = sub.add_parser("compile", help="compile a problem file to a schedule")
    p_compile.add_argument("--input", required=True, help="problem JSON file")
    p_compile.add_argument("--output", required=True, help="schedule JSON file to write")
    p_compile.add_argument(
        "--epsilon", type=float, default=DEFAULT_EPSILON,
        help="drop blocks with duration <= epsilon * time (default 1e-12)",
    )
    p_compile.set_defaults(func=cmd_compile)

    p_verify = sub.add_parser("verify", help="check a schedule against the exact target")
    p_verify.add_argument("--input", required=True, help="problem JSON file")
    p_verify.add_argument("--schedule", required=True, help="schedule JSON file")
    p_verify.add_argument("--tol", type=float, default=1e-9, help="distance tolerance")
    p_verify.add_argument(
        "--max-qubits", type=int, default=10,
        help="dense-verification qubit cap (default 10)",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_stats = sub.add_parser("stats", help="report schedule statistics")
    p_stats.add_argument("--input", required=True, help="problem JSON file")
    p_stats.add_argument("--schedule", required=True, help="schedule JSON file")
    p_stats.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
