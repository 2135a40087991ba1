"""Realise an arbitrary chain ZZ evolution from the fixed resource chain.

Given requested slot phases phi_j and resource couplings g_j, the ratio
b_j = phi_j / (g_j t_f) says how much of the resource each slot needs.  After
flipping negative ratios (an X-gate coloring flips a slot's sign in every
block) and sorting them in descending order, the sign pattern "slot j runs
positive during blocks n >= j" solves in closed form:

    t_n / t_f = (b_n - b_{n+1}) / 2   for n < L-1,
    t_{L-1} / t_f = (b_1 + b_{L-1}) / 2,

giving non-negative durations, at most L-1 blocks (equal or zero ratios drop
blocks), and total analog time sum|t_n| = max_j |b_j| * t_f, which is the
minimum possible.  Masks color qubits by prefix parity so that exactly the
intended slots flip sign in each block.

The closed form is the production path; `sign_matrix_inverse` exists as an
independent oracle for tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .circuits import ResourceBlock
from .errors import UnschedulableError
from .graphs import NNChain


@dataclass(frozen=True)
class NormalizationRecord:
    """How ratios were rearranged: slot_order maps sorted position -> original
    slot; sign_flips marks original slots whose coupling sign is inverted in
    every block."""

    slot_order: tuple[int, ...]
    sign_flips: tuple[bool, ...]

    def __post_init__(self):
        if sorted(self.slot_order) != list(range(len(self.slot_order))):
            raise ValueError("slot_order must be a permutation")
        if len(self.sign_flips) != len(self.slot_order):
            raise ValueError("one sign flip flag per slot required")


@dataclass(frozen=True)
class BlockSchedule:
    """Solved analog blocks realising a requested chain evolution."""

    t_f: float
    blocks: tuple[ResourceBlock, ...]

    def total_time(self) -> float:
        return math.fsum(b.duration for b in self.blocks)


def coupling_ratios(
    target_angles: Sequence[float], resource: NNChain, t_f: float
) -> np.ndarray:
    """b_j = phi_j / (g_j t_f); zero-over-zero slots get b_j = 0."""
    if not (math.isfinite(t_f) and t_f > 0):
        raise ValueError(f"reference time must be positive and finite, got {t_f}")
    m = resource.num_qubits - 1
    if len(target_angles) != m:
        raise ValueError(f"expected {m} slot angles, got {len(target_angles)}")
    b = np.zeros(m)
    for j, (phi, g) in enumerate(zip(target_angles, resource.couplings)):
        phi = float(phi)
        if not math.isfinite(phi):
            raise ValueError(f"non-finite angle on slot {j}")
        if g == 0.0:
            if phi != 0.0:
                raise UnschedulableError(j, phi)
            continue
        b[j] = phi / (g * t_f)
    return b


def normalize_ratios(b: Sequence[float]) -> tuple[np.ndarray, NormalizationRecord]:
    """Absolute values sorted descending plus the record undoing the rearrangement.

    Stable: ties keep ascending original slot order, so output is deterministic.
    """
    b = np.asarray(b, dtype=float)
    flips = tuple(bool(v < 0.0) for v in b)
    magnitudes = np.abs(b)
    order = sorted(range(len(b)), key=lambda j: (-magnitudes[j], j))
    return magnitudes[order], NormalizationRecord(tuple(order), flips)


def sign_matrix(n: int) -> np.ndarray:
    """Block sign pattern: entry (j, n) is +1 iff block n >= slot j (0-based)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    cols = np.arange(n)
    return np.where(cols[None, :] >= cols[:, None], 1, -1).astype(float)


def sign_matrix_inverse(n: int) -> np.ndarray:
    """Inverse of sign_matrix via row elimination (test oracle).

    Row operations r_i = (r_i + r_1)/2 for i > 1, then r_i = r_i - r_{i+1}
    for ascending i < n-1, turn the sign matrix into the identity; applied to
    the identity they produce the inverse exactly (all entries are halves).
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    a = sign_matrix(n)
    inv = np.eye(n)
    for i in range(1, n):
        a[i] = (a[i] + a[0]) / 2.0
        inv[i] = (inv[i] + inv[0]) / 2.0
    for i in range(n - 1):
        a[i] = a[i] - a[i + 1]
        inv[i] = inv[i] - inv[i + 1]
    if not np.array_equal(a, np.eye(n)):
        raise AssertionError("row elimination failed to reach the identity")
    return inv


def solve_block_times(b_sorted: Sequence[float], t_f: float) -> np.ndarray:
    """Closed-form block durations for descending non-negative ratios."""
    if not (math.isfinite(t_f) and t_f > 0):
        raise ValueError(f"reference time must be positive and finite, got {t_f}")
    b = np.asarray(b_sorted, dtype=float)
    m = len(b)
    if m < 1:
        raise ValueError("need at least one slot")
    if b[-1] < 0.0 or np.any(b[:-1] < b[1:]):
        raise ValueError("ratios must be sorted descending and non-negative")
    t = np.empty(m)
    t[: m - 1] = (b[: m - 1] - b[1:]) * (t_f / 2.0)
    t[m - 1] = (b[0] + b[m - 1]) * (t_f / 2.0)
    return t


def mask_from_row(
    row: Sequence[int], record: NormalizationRecord, num_qubits: int
) -> tuple[bool, ...]:
    """X-gate mask realising one block's slot signs.

    `row` holds the +-1 sign per sorted slot; it is mapped back to original
    slots, combined with the record's permanent flips, and converted to a
    qubit coloring by prefix parity: a slot flips sign exactly when its two
    endpoints are colored differently.
    """
    m = num_qubits - 1
    if len(row) != m or len(record.slot_order) != m:
        raise ValueError(f"expected {m} slot signs")
    if any(s not in (1, -1) for s in row):
        raise ValueError("slot signs must be +1 or -1")
    original = [0] * m
    for pos, sign in enumerate(row):
        original[record.slot_order[pos]] = sign
    mask = [False] * num_qubits
    for j in range(m):
        effective = -original[j] if record.sign_flips[j] else original[j]
        mask[j + 1] = mask[j] ^ (effective == -1)
    return tuple(mask)


def minimum_time(b: Sequence[float], t_f: float) -> float:
    """Least possible total analog time: max_j |b_j| * t_f."""
    b = np.asarray(b, dtype=float)
    if b.size == 0:
        return 0.0
    return float(np.max(np.abs(b)) * t_f)


def schedule(
    target_angles: Sequence[float],
    resource: NNChain,
    t_f: float,
    epsilon: float = 1e-12,
) -> BlockSchedule:
    """Full pipeline: ratios -> normalize -> closed-form times -> sign masks.

    Blocks with duration <= epsilon * t_f are dropped (equal ratios produce
    exact zeros, and float ties must not spawn ghost blocks).  The result
    reconstructs every slot angle exactly and achieves the minimum total time.
    """
    b = coupling_ratios(target_angles, resource, t_f)
    b_sorted, record = normalize_ratios(b)
    times = solve_block_times(b_sorted, t_f)
    m = len(b_sorted)
    blocks = []
    for n in range(m):
        if times[n] <= epsilon * t_f:
            continue
        row = [1 if n >= pos else -1 for pos in range(m)]
        mask = mask_from_row(row, record, resource.num_qubits)
        blocks.append(ResourceBlock(float(times[n]), mask))
    return BlockSchedule(t_f=t_f, blocks=tuple(blocks))
