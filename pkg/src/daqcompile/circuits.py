"""Digital-analog circuit IR and the all-to-all compilation circuits.

A Circuit is an ordered instruction list over three kinds:

* DigitalLayer - parallel gates on pairwise disjoint qubits (single-qubit
  rotations or adjacent iSWAP/iSWAP-dagger gates);
* AnalogRequest - an ideal chain ZZ evolution asking for phase phi_j on each
  slot j (the scheduler later realises it from the fixed resource);
* ResourceBlock - an executable evolution under the resource chain for a
  non-negative duration, conjugated on both sides by X gates where x_mask is
  true (flipping the sign of every coupling whose endpoints differ in mask).

Compilation strategy: split the target graph into zig-zag Hamiltonian paths,
realise each path by conjugating a chain evolution with adjacent swap-gate
layers, and between consecutive paths keep only the two mixed bridge layers
that survive gate cancellation (even L).  Odd L falls back to per-path
conjugation synthesised by the generic sorting network.

Requested analog angles are kept unreduced (no mod 2*pi) so durations stay
minimal and well defined; global phase is not tracked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from .graphs import CouplingGraph, PathCover, walecki_cover
from .swaps import SwapSequence, sort_network_sequence, walecki_sequence


class GateType(str, Enum):
    X = "x"
    H = "h"
    R = "r"          # R = H S H with S the phase gate; R**2 = X, R**3 = R-dagger
    RZ = "rz"        # Rz(theta) = exp(i Z theta / 2), positive-exponent convention
    ISWAP = "iswap"
    ISWAP_DG = "iswap_dg"


_TWO_QUBIT = frozenset({GateType.ISWAP, GateType.ISWAP_DG})


@dataclass(frozen=True)
class Gate:
    type: GateType
    qubits: tuple[int, ...]
    angle: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if self.type in _TWO_QUBIT:
            if len(self.qubits) != 2 or self.qubits[1] != self.qubits[0] + 1:
                raise ValueError(f"{self.type.value} must act on an adjacent pair, got {self.qubits}")
        else:
            if len(self.qubits) != 1:
                raise ValueError(f"{self.type.value} is single-qubit, got {self.qubits}")
        if not math.isfinite(self.angle):
            raise ValueError("non-finite gate angle")
        if self.angle != 0.0 and self.type is not GateType.RZ:
            raise ValueError(f"{self.type.value} takes no angle")

    @classmethod
    def x(cls, q: int) -> "Gate":
        return cls(GateType.X, (q,))

    @classmethod
    def h(cls, q: int) -> "Gate":
        return cls(GateType.H, (q,))

    @classmethod
    def r(cls, q: int) -> "Gate":
        return cls(GateType.R, (q,))

    @classmethod
    def rz(cls, q: int, angle: float) -> "Gate":
        return cls(GateType.RZ, (q,), float(angle))

    @classmethod
    def iswap(cls, left: int) -> "Gate":
        return cls(GateType.ISWAP, (left, left + 1))

    @classmethod
    def iswap_dg(cls, left: int) -> "Gate":
        return cls(GateType.ISWAP_DG, (left, left + 1))

    @property
    def is_two_qubit(self) -> bool:
        return self.type in _TWO_QUBIT


@dataclass(frozen=True)
class DigitalLayer:
    """Gates applying in parallel; no qubit may appear twice."""

    gates: tuple[Gate, ...]

    def __post_init__(self):
        if not self.gates:
            raise ValueError("empty digital layer")
        touched: set[int] = set()
        for g in self.gates:
            for q in g.qubits:
                if q in touched:
                    raise ValueError(f"qubit {q} used twice in one layer")
                touched.add(q)

    @property
    def has_iswaps(self) -> bool:
        return any(g.is_two_qubit for g in self.gates)


@dataclass(frozen=True)
class AnalogRequest:
    """Ideal chain ZZ evolution: slot j should accumulate phase slot_angles[j]."""

    slot_angles: tuple[float, ...]

    def __post_init__(self):
        angles = tuple(float(a) for a in self.slot_angles)
        if not all(math.isfinite(a) for a in angles):
            raise ValueError("non-finite slot angle")
        object.__setattr__(self, "slot_angles", angles)


@dataclass(frozen=True)
class ResourceBlock:
    """Evolution under the resource chain, X-conjugated where x_mask is true."""

    duration: float
    x_mask: tuple[bool, ...]

    def __post_init__(self):
        if not (math.isfinite(self.duration) and self.duration >= 0.0):
            raise ValueError(f"block duration must be finite and >= 0, got {self.duration}")
        object.__setattr__(self, "x_mask", tuple(bool(b) for b in self.x_mask))

    def slot_signs(self) -> tuple[int, ...]:
        """Effective coupling sign per chain slot under the X conjugation."""
        return tuple(
            -1 if self.x_mask[j] != self.x_mask[j + 1] else 1
            for j in range(len(self.x_mask) - 1)
        )


Instruction = Union[DigitalLayer, AnalogRequest, ResourceBlock]


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    instructions: tuple[Instruction, ...]

    def __post_init__(self):
        L = self.num_qubits
        if L < 2:
            raise ValueError("a circuit needs at least 2 qubits")
        for instr in self.instructions:
            if isinstance(instr, DigitalLayer):
                for g in instr.gates:
                    if max(g.qubits) >= L:
                        raise ValueError(f"gate on qubit {max(g.qubits)} exceeds L={L}")
            elif isinstance(instr, AnalogRequest):
                if len(instr.slot_angles) != L - 1:
                    raise ValueError(f"analog request needs {L - 1} slot angles")
            elif isinstance(instr, ResourceBlock):
                if len(instr.x_mask) != L:
                    raise ValueError(f"x_mask needs length {L}")
            else:
                raise TypeError(f"unknown instruction {instr!r}")


@dataclass(frozen=True)
class ScheduleStats:
    analog_block_count: int
    total_analog_time: float
    sqr_count: int
    iswap_layer_count: int


def circuit_stats(circuit: Circuit) -> ScheduleStats:
    analog = 0
    total_time = 0.0
    sqr = 0
    iswap_layers = 0
    for instr in circuit.instructions:
        if isinstance(instr, AnalogRequest):
            analog += 1
        elif isinstance(instr, ResourceBlock):
            analog += 1
            total_time += instr.duration
        elif isinstance(instr, DigitalLayer):
            if instr.has_iswaps:
                iswap_layers += 1
            sqr += sum(1 for g in instr.gates if not g.is_two_qubit)
    return ScheduleStats(analog, total_time, sqr, iswap_layers)


# --- general Z-relaying swap gate -----------------------------------------

@dataclass(frozen=True)
class GeneralSwap:
    """Two-qubit gate relocating Z operators across an adjacent pair.

    Decomposition: Rz(rz_first) on the pair's lower qubit, then the entangler
    exp(i pi/4 (XX + YY + zz_coefficient * ZZ)), then Rz(rz_last) on the lower
    qubit again.  Any parameter choice conjugates Z x I into I x Z and back.
    """

    rz_first: float
    zz_coefficient: float
    rz_last: float


def general_swap(alpha: float, beta: float, gamma: float) -> GeneralSwap:
    """Three-parameter family of Z-relaying gates.

    alpha = gamma = 0, beta = -1/2 collapses to the bare iSWAP (no flanking
    rotations, no ZZ term), the cheapest member for chain resources.
    """
    for v in (alpha, beta, gamma):
        if not math.isfinite(v):
            raise ValueError("non-finite swap parameter")
    half = (gamma - alpha) / 2.0
    return GeneralSwap(
        rz_first=math.pi * (half - 0.5 - beta),
        zz_coefficient=gamma + alpha,
        rz_last=math.pi * (half + 0.5 + beta),
    )


# --- path-frame circuits ----------------------------------------------------

def _iswap_layer(starts: Iterable[int], dagger: bool) -> DigitalLayer:
    mk = Gate.iswap_dg if dagger else Gate.iswap
    return DigitalLayer(tuple(mk(i) for i in sorted(starts)))


def _mixed_layer(plain: Iterable[int], dagger: Iterable[int]) -> DigitalLayer:
    gates = [(i, Gate.iswap(i)) for i in plain] + [(i, Gate.iswap_dg(i)) for i in dagger]
    return DigitalLayer(tuple(g for _, g in sorted(gates)))


def _opening_layers(seq: SwapSequence) -> list[DigitalLayer]:
    """Gate layers entering a path frame: plain iSWAPs in sequence order."""
    return [_iswap_layer(layer, dagger=False) for layer in seq.layers]


def _closing_layers(seq: SwapSequence) -> list[DigitalLayer]:
    """Gate layers leaving a path frame: daggered iSWAPs in reverse order."""
    return [_iswap_layer(layer, dagger=True) for layer in reversed(seq.layers)]


def bridge_layers(k: int, num_qubits: int) -> list[DigitalLayer]:
    """iSWAP layers between consecutive analog blocks of the even-L pipeline.

    Bridge 0 opens path 1, bridge L/2 closes path L/2, and bridge k in
    between both closes path k and opens path k+1.  After cancelling
    adjacent inverse gates the middle bridges shrink to exactly two mixed
    layers: plain gates on pair starts below 2k (0-based) and daggered gates
    from 2k upward, odd-position pairs first, then even-position pairs.
    """
    L = num_qubits
    if L < 2 or L % 2 != 0:
        raise ValueError(f"even qubit count >= 2 required, got {L}")
    if not 0 <= k <= L // 2:
        raise ValueError(f"bridge index {k} out of range 0..{L // 2}")
    if k == 0:
        return _opening_layers(walecki_sequence(1, L))
    if k == L // 2:
        return _closing_layers(walecki_sequence(L // 2, L))
    first = _mixed_layer(range(0, 2 * k - 1, 2), range(2 * k, L - 1, 2))
    second = _mixed_layer(range(1, 2 * k, 2), range(2 * k + 1, L - 2, 2))
    return [first, second]


def _path_requests(target: CouplingGraph, cover: PathCover, t_f: float) -> list[AnalogRequest]:
    """Per-path slot angles: slot j of path P carries t_f * g'(P[j], P[j+1])."""
    requests = []
    for p, disabled in zip(cover.paths, cover.disabled_slots):
        angles = [
            0.0 if slot in disabled else t_f * target.weight(p[slot], p[slot + 1])
            for slot in range(cover.num_qubits - 1)
        ]
        requests.append(AnalogRequest(tuple(angles)))
    return requests


def ata_circuit_general(target: CouplingGraph, t_f: float) -> Circuit:
    """High-level circuit whose unitary is exp(i t_f H) for the target graph.

    Even L uses the bridged zig-zag pipeline; odd L emits one conjugated
    frame per path of the odd cover.  Analog requests are ideal and still
    need scheduling onto a concrete resource chain.
    """
    if not math.isfinite(t_f):
        raise ValueError("non-finite evolution time")
    L = target.num_qubits
    if L % 2 != 0:
        return ata_circuit_per_path(target, t_f)
    cover = walecki_cover(L)
    requests = _path_requests(target, cover, t_f)
    instrs: list[Instruction] = []
    half = L // 2
    instrs.extend(bridge_layers(0, L))
    for k in range(1, half + 1):
        instrs.append(requests[k - 1])
        if k < half:
            instrs.extend(bridge_layers(k, L))
    instrs.extend(bridge_layers(half, L))
    return Circuit(L, tuple(instrs))


def ata_circuit_per_path(target: CouplingGraph, t_f: float) -> Circuit:
    """Unsimplified variant: every path opens and closes its own swap frame.

    Equal in unitary to ata_circuit_general but without the inter-path gate
    cancellation; this is also the production route for odd L, where the
    frames come from the generic sorting network.
    """
    if not math.isfinite(t_f):
        raise ValueError("non-finite evolution time")
    L = target.num_qubits
    cover = walecki_cover(L)
    requests = _path_requests(target, cover, t_f)
    instrs: list[Instruction] = []
    for idx, path in enumerate(cover.paths):
        if L % 2 == 0:
            seq = walecki_sequence(idx + 1, L)
        else:
            seq = sort_network_sequence(path)
        instrs.extend(_opening_layers(seq))
        instrs.append(requests[idx])
        instrs.extend(_closing_layers(seq))
    return Circuit(L, tuple(instrs))


def ata_circuit(num_qubits: int, t_f: float, coupling: float = 1.0) -> Circuit:
    """Homogeneous all-to-all evolution exp(i t_f g sum_{i<j} Z_i Z_j), even L."""
    if num_qubits % 2 != 0:
        raise ValueError("odd qubit count: use ata_circuit_general")
    return ata_circuit_general(CouplingGraph.complete(num_qubits, coupling), t_f)


# --- lowering iSWAP layers to analog requests + single-qubit rotations ------

def lower_iswap_layer(layer: DigitalLayer, num_qubits: int) -> list[Instruction]:
    """Replace a parallel iSWAP layer by ZZ analog requests and rotations.

    exp(+-i pi/4 (XX+YY)) splits into commuting XX and YY halves; each half is
    a chain ZZ evolution conjugated into the right basis (H for XX, R = HSH
    for YY, closed by R-dagger emitted as R then X since R**3 = R-dagger).
    Daggered gates request angle -pi/4; the scheduler's sign masks absorb the
    sign so durations stay non-negative.
    """
    if not all(g.is_two_qubit for g in layer.gates):
        raise ValueError("layer mixes iSWAPs with single-qubit gates")
    angles = [0.0] * (num_qubits - 1)
    touched: list[int] = []
    for g in layer.gates:
        sign = -1.0 if g.type is GateType.ISWAP_DG else 1.0
        angles[g.qubits[0]] = sign * math.pi / 4.0
        touched.extend(g.qubits)
    touched.sort()
    request = AnalogRequest(tuple(angles))
    h_layer = DigitalLayer(tuple(Gate.h(q) for q in touched))
    r_layer = DigitalLayer(tuple(Gate.r(q) for q in touched))
    x_layer = DigitalLayer(tuple(Gate.x(q) for q in touched))
    return [h_layer, request, h_layer, r_layer, request, r_layer, x_layer]


def lower_swap_layers(circuit: Circuit) -> Circuit:
    """Lower every iSWAP layer of a circuit; other instructions pass through."""
    instrs: list[Instruction] = []
    for instr in circuit.instructions:
        if isinstance(instr, DigitalLayer) and instr.has_iswaps:
            instrs.extend(lower_iswap_layer(instr, circuit.num_qubits))
        else:
            instrs.append(instr)
    return Circuit(circuit.num_qubits, tuple(instrs))
