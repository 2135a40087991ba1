"""Problem and schedule files: strict JSON parsing and deterministic emission.

Both formats are UTF-8 JSON with fixed field order on emission and floats
written with 17 significant digits (enough to round-trip binary64 exactly),
so identical inputs produce byte-identical outputs.  Unknown fields are
rejected on parse.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Any

from .circuits import (
    Circuit,
    DigitalLayer,
    Gate,
    GateType,
    Instruction,
    ResourceBlock,
)
from .errors import FileFormatError
from .graphs import CouplingGraph, NNChain

SCHEDULE_FORMAT = "daqc-schedule/1"

_SQR_NAMES = {
    GateType.X.value: GateType.X,
    GateType.H.value: GateType.H,
    GateType.R.value: GateType.R,
    GateType.RZ.value: GateType.RZ,
}


@dataclass(frozen=True)
class ProblemSpec:
    num_qubits: int
    resource: NNChain
    target_type: str                      # "ata" or "nn"
    target_graph: CouplingGraph | None
    target_angles: tuple[float, ...] | None
    t_f: float


# --- strict readers ---------------------------------------------------------

def _require_keys(obj: dict, keys: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise FileFormatError(f"{where}: expected an object")
    extra = set(obj) - keys
    missing = keys - set(obj)
    if extra:
        raise FileFormatError(f"{where}: unknown fields {sorted(extra)}")
    if missing:
        raise FileFormatError(f"{where}: missing fields {sorted(missing)}")


def _as_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FileFormatError(f"{where}: expected an integer")
    return value


def _as_number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FileFormatError(f"{where}: expected a number")
    value = float(value)
    if not math.isfinite(value):
        raise FileFormatError(f"{where}: non-finite number")
    return value


def _as_number_list(value: Any, length: int, where: str) -> tuple[float, ...]:
    if not isinstance(value, list) or len(value) != length:
        raise FileFormatError(f"{where}: expected a list of {length} numbers")
    return tuple(_as_number(v, f"{where}[{i}]") for i, v in enumerate(value))


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON: {exc}") from exc


def load_problem(path: str) -> ProblemSpec:
    data = _load_json(path)
    _require_keys(data, {"num_qubits", "resource_couplings", "target", "time"}, "problem")
    L = _as_int(data["num_qubits"], "num_qubits")
    if L < 2:
        raise FileFormatError("num_qubits must be >= 2")
    resource = NNChain(L, _as_number_list(data["resource_couplings"], L - 1, "resource_couplings"))
    t_f = _as_number(data["time"], "time")
    if t_f <= 0:
        raise FileFormatError("time must be positive")
    target = data["target"]
    if not isinstance(target, dict) or "type" not in target:
        raise FileFormatError("target: expected an object with a 'type' field")
    if target["type"] == "ata":
        _require_keys(target, {"type", "couplings"}, "target")
        if not isinstance(target["couplings"], list):
            raise FileFormatError("target.couplings: expected a list")
        weights: dict[tuple[int, int], float] = {}
        for idx, entry in enumerate(target["couplings"]):
            where = f"target.couplings[{idx}]"
            _require_keys(entry, {"i", "j", "value"}, where)
            i = _as_int(entry["i"], f"{where}.i")
            j = _as_int(entry["j"], f"{where}.j")
            if not (0 <= i < j < L):
                raise FileFormatError(f"{where}: need 0 <= i < j < {L}")
            if (i, j) in weights:
                raise FileFormatError(f"{where}: duplicate edge ({i}, {j})")
            weights[(i, j)] = _as_number(entry["value"], f"{where}.value")
        graph = CouplingGraph(L, weights)
        return ProblemSpec(L, resource, "ata", graph, None, t_f)
    if target["type"] == "nn":
        _require_keys(target, {"type", "angles"}, "target")
        angles = _as_number_list(target["angles"], L - 1, "target.angles")
        return ProblemSpec(L, resource, "nn", None, angles, t_f)
    raise FileFormatError(f"target.type must be 'ata' or 'nn', got {target['type']!r}")


def load_schedule(path: str) -> tuple[Circuit, NNChain, float, dict]:
    """Parse a schedule file into (circuit, resource echo, time, metadata)."""
    data = _load_json(path)
    _require_keys(
        data,
        {"format", "num_qubits", "resource_couplings", "time", "instructions", "metadata"},
        "schedule",
    )
    if data["format"] != SCHEDULE_FORMAT:
        raise FileFormatError(f"unsupported schedule format {data['format']!r}")
    L = _as_int(data["num_qubits"], "num_qubits")
    if L < 2:
        raise FileFormatError("num_qubits must be >= 2")
    resource = NNChain(L, _as_number_list(data["resource_couplings"], L - 1, "resource_couplings"))
    t_f = _as_number(data["time"], "time")
    if not isinstance(data["instructions"], list):
        raise FileFormatError("instructions: expected a list")
    instrs: list[Instruction] = []
    for idx, entry in enumerate(data["instructions"]):
        where = f"instructions[{idx}]"
        if not isinstance(entry, dict) or len(entry) != 1:
            raise FileFormatError(f"{where}: expected exactly one of 'sqr'/'resource_block'")
        if "sqr" in entry:
            gates = []
            if not isinstance(entry["sqr"], list) or not entry["sqr"]:
                raise FileFormatError(f"{where}.sqr: expected a non-empty list")
            for g_idx, g in enumerate(entry["sqr"]):
                g_where = f"{where}.sqr[{g_idx}]"
                if not isinstance(g, dict):
                    raise FileFormatError(f"{g_where}: expected an object")
                keys = {"q", "gate", "angle"} if g.get("gate") == "rz" else {"q", "gate"}
                _require_keys(g, keys, g_where)
                q = _as_int(g["q"], f"{g_where}.q")
                if g["gate"] not in _SQR_NAMES:
                    raise FileFormatError(f"{g_where}: unknown gate {g['gate']!r}")
                gate_type = _SQR_NAMES[g["gate"]]
                angle = _as_number(g["angle"], f"{g_where}.angle") if gate_type is GateType.RZ else 0.0
                gates.append(Gate(gate_type, (q,), angle))
            instrs.append(DigitalLayer(tuple(gates)))
        elif "resource_block" in entry:
            block = entry["resource_block"]
            _require_keys(block, {"duration", "x_mask"}, f"{where}.resource_block")
            duration = _as_number(block["duration"], f"{where}.duration")
            mask = block["x_mask"]
            if not isinstance(mask, list) or len(mask) != L or not all(isinstance(b, bool) for b in mask):
                raise FileFormatError(f"{where}.x_mask: expected {L} booleans")
            instrs.append(ResourceBlock(duration, tuple(mask)))
        else:
            raise FileFormatError(f"{where}: expected 'sqr' or 'resource_block'")
    metadata = data["metadata"]
    _require_keys(metadata, {"tool_version", "input_sha256", "stats"}, "metadata")
    if not isinstance(metadata["stats"], dict):
        raise FileFormatError("metadata.stats: expected an object")
    try:
        circuit = Circuit(L, tuple(instrs))
    except (ValueError, TypeError) as exc:
        raise FileFormatError(f"schedule instructions invalid: {exc}") from exc
    return circuit, resource, t_f, metadata


# --- deterministic writer ---------------------------------------------------

def _emit(value: Any, out: list[str], indent: int) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, (k, v) in enumerate(value.items()):
            out.append(f"{pad}  {json.dumps(k)}: ")
            _emit(v, out, indent + 1)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, list):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(value):
            out.append(pad + "  ")
            _emit(v, out, indent + 1)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, float):
        out.append(format(value, ".17g"))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif value is None:
        out.append("null")
    else:
        raise TypeError(f"cannot serialise {value!r}")


def dumps_canonical(obj: Any) -> str:
    out: list[str] = []
    _emit(obj, out, 0)
    out.append("\n")
    return "".join(out)


def _instruction_entry(instr: Instruction) -> dict:
    if isinstance(instr, DigitalLayer):
        gates = []
        for g in instr.gates:
            if g.is_two_qubit:
                raise ValueError("cannot serialise iSWAP layers; lower the circuit first")
            entry: dict[str, Any] = {"q": g.qubits[0], "gate": g.type.value}
            if g.type is GateType.RZ:
                entry["angle"] = g.angle
            gates.append(entry)
        return {"sqr": gates}
    if isinstance(instr, ResourceBlock):
        return {"resource_block": {"duration": instr.duration, "x_mask": list(instr.x_mask)}}
    raise ValueError(f"cannot serialise {instr!r}; schedule analog requests first")


def schedule_document(
    circuit: Circuit,
    resource: NNChain,
    t_f: float,
    stats: dict,
    tool_version: str,
    input_sha256: str,
) -> dict:
    return {
        "format": SCHEDULE_FORMAT,
        "num_qubits": circuit.num_qubits,
        "resource_couplings": list(resource.couplings),
        "time": float(t_f),
        "instructions": [_instruction_entry(i) for i in circuit.instructions],
        "metadata": {
            "tool_version": tool_version,
            "input_sha256": input_sha256,
            "stats": stats,
        },
    }


def sha256_of_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        digest.update(fh.read())
    return digest.hexdigest()
