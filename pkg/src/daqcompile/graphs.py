"""Weighted-graph view of ZZ Ising couplings and complete-graph path covers.

An all-to-all ZZ Ising Hamiltonian over L qubits is a weighted complete graph
K_L, while the chip's native chain is the Hamiltonian path 0-1-...-(L-1).
The zig-zag path family splits K_L into Hamiltonian paths so the chain can
realise every target edge exactly once: path 1 walks forward one node, back
two, forward three, ... around the cycle Z_L, and path k is path 1 rotated by
k-1.  For even L the L/2 paths tile K_L exactly; for odd L the (L+1)/2 paths
overlap and duplicated slots are disabled (first occurrence wins).

Qubit indices are 0-based throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

Edge = tuple[int, int]


def canonical_edge(i: int, j: int, num_qubits: int) -> Edge:
    """Undirected edge as an ordered pair; rejects self-loops and bad indices."""
    if not (0 <= i < num_qubits and 0 <= j < num_qubits):
        raise ValueError(f"qubit index out of range for {num_qubits} qubits: ({i}, {j})")
    if i == j:
        raise ValueError(f"self-loop on qubit {i}")
    return (i, j) if i < j else (j, i)


def validate_permutation(perm: Sequence[int], num_qubits: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(num_qubits)):
        raise ValueError(f"not a permutation of 0..{num_qubits - 1}: {perm}")
    return perm


@dataclass(frozen=True)
class CouplingGraph:
    """Symmetric weighted graph of ZZ coupling strengths g_ij (rad/time).

    Absent edges mean zero coupling; explicit zero weights are allowed (they
    matter for disabled slots and sparse targets).
    """

    num_qubits: int
    weights: dict[Edge, float]

    def __post_init__(self):
        if self.num_qubits < 2:
            raise ValueError("a coupling graph needs at least 2 qubits")
        canon: dict[Edge, float] = {}
        for (i, j), w in self.weights.items():
            w = float(w)
            if not math.isfinite(w):
                raise ValueError(f"non-finite weight on edge ({i}, {j})")
            edge = canonical_edge(i, j, self.num_qubits)
            if edge in canon and canon[edge] != w:
                raise ValueError(f"conflicting weights for edge {edge}")
            canon[edge] = w
        object.__setattr__(self, "weights", canon)

    @classmethod
    def complete(cls, num_qubits: int, weight: float = 1.0) -> "CouplingGraph":
        """Homogeneous all-to-all graph K_L."""
        return cls(
            num_qubits,
            {(i, j): weight for i in range(num_qubits) for j in range(i + 1, num_qubits)},
        )

    def weight(self, i: int, j: int) -> float:
        return self.weights.get(canonical_edge(i, j, self.num_qubits), 0.0)

    def edge_set(self) -> set[Edge]:
        return set(self.weights)


@dataclass(frozen=True)
class NNChain:
    """Fixed chain resource: coupling j sits between qubits j and j+1."""

    num_qubits: int
    couplings: tuple[float, ...]

    def __post_init__(self):
        if self.num_qubits < 2:
            raise ValueError("a chain needs at least 2 qubits")
        couplings = tuple(float(g) for g in self.couplings)
        if len(couplings) != self.num_qubits - 1:
            raise ValueError(
                f"expected {self.num_qubits - 1} couplings, got {len(couplings)}"
            )
        if not all(math.isfinite(g) for g in couplings):
            raise ValueError("non-finite chain coupling")
        object.__setattr__(self, "couplings", couplings)


def complete_edge_set(num_qubits: int) -> set[Edge]:
    return {(i, j) for i in range(num_qubits) for j in range(i + 1, num_qubits)}


def zigzag_path(k: int, num_qubits: int) -> tuple[int, ...]:
    """Vertex permutation of the k-th zig-zag Hamiltonian path (1-based label k).

    Position j (1-based) holds (k-1 + j/2) mod L for even j and
    (k-1 - (j-1)/2) mod L for odd j.  Labels run 1..L/2 for even L and
    1..(L+1)/2 for odd L.
    """
    L = num_qubits
    if L < 2:
        raise ValueError("need at least 2 qubits")
    max_k = L // 2 if L % 2 == 0 else (L + 1) // 2
    if not 1 <= k <= max_k:
        raise ValueError(f"path label {k} out of range 1..{max_k} for L={L}")
    entries = []
    for pos in range(1, L + 1):
        if pos % 2 == 0:
            entries.append((k - 1 + pos // 2) % L)
        else:
            entries.append((k - 1 - (pos - 1) // 2) % L)
    return tuple(entries)


def path_edges(perm: Sequence[int]) -> set[Edge]:
    """Edges between consecutive entries of a vertex permutation."""
    p = validate_permutation(perm, len(perm))
    return {canonical_edge(p[j], p[j + 1], len(p)) for j in range(len(p) - 1)}


def walecki_paths(num_qubits: int) -> list[tuple[int, ...]]:
    """The L/2 zig-zag paths whose edge sets tile K_L (even L only)."""
    if num_qubits < 2 or num_qubits % 2 != 0:
        raise ValueError(f"even qubit count >= 2 required, got {num_qubits}")
    return [zigzag_path(k, num_qubits) for k in range(1, num_qubits // 2 + 1)]


@dataclass(frozen=True)
class PathCover:
    """A set of Hamiltonian paths with per-path disabled slots.

    Slot j of a path couples its entries j and j+1.  The zig-zag
    constructors guarantee every complete-graph edge is enabled exactly once
    (odd-L overlaps get disabled); arbitrary covers, including repeated
    paths, are allowed for composition.
    """

    num_qubits: int
    paths: tuple[tuple[int, ...], ...]
    disabled_slots: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.disabled_slots) != len(self.paths):
            raise ValueError("one disabled-slot set per path required")
        for p in self.paths:
            validate_permutation(p, self.num_qubits)
        for disabled in self.disabled_slots:
            if any(not 0 <= s < self.num_qubits - 1 for s in disabled):
                raise ValueError("disabled slot index out of range")

    @classmethod
    def from_paths(cls, paths: Sequence[Sequence[int]]) -> "PathCover":
        paths = tuple(tuple(p) for p in paths)
        return cls(len(paths[0]), paths, tuple(frozenset() for _ in paths))

    def num_slots(self) -> int:
        return len(self.paths) * (self.num_qubits - 1)

    def enabled_edges(self) -> dict[Edge, tuple[int, int]]:
        """Map of enabled edge -> (path index, slot index)."""
        out: dict[Edge, tuple[int, int]] = {}
        for p_idx, (p, disabled) in enumerate(zip(self.paths, self.disabled_slots)):
            for slot in range(self.num_qubits - 1):
                if slot not in disabled:
                    out[canonical_edge(p[slot], p[slot + 1], self.num_qubits)] = (p_idx, slot)
        return out


def walecki_paths_odd(num_qubits: int) -> PathCover:
    """Zig-zag cover of K_L for odd L: (L+1)/2 paths, duplicate edges disabled.

    Scanning paths in label order and slots left to right, the first
    occurrence of an edge stays enabled and every later duplicate is disabled,
    so the result is deterministic.
    """
    L = num_qubits
    if L < 3 or L % 2 == 0:
        raise ValueError(f"odd qubit count >= 3 required, got {L}")
    paths = tuple(zigzag_path(k, L) for k in range(1, (L + 1) // 2 + 1))
    seen: set[Edge] = set()
    disabled: list[frozenset[int]] = []
    for p in paths:
        dead = set()
        for slot in range(L - 1):
            edge = canonical_edge(p[slot], p[slot + 1], L)
            if edge in seen:
                dead.add(slot)
            else:
                seen.add(edge)
        disabled.append(frozenset(dead))
    return PathCover(L, paths, tuple(disabled))


def walecki_cover(num_qubits: int) -> PathCover:
    """Path cover of K_L for any L >= 2 (no disabled slots when L is even)."""
    if num_qubits % 2 == 0:
        return PathCover.from_paths(walecki_paths(num_qubits))
    return walecki_paths_odd(num_qubits)


def compose_weighted_paths(
    cover: PathCover,
    slot_weights: Sequence[Sequence[float]],
    times: Sequence[float],
) -> CouplingGraph:
    """Sum of path Hamiltonians weighted by their evolution times.

    Because all ZZ terms commute, evolving each path for its own time is the
    same as evolving the summed graph once; this is the semantic oracle for
    every composition in the pipeline.  Disabled slots must carry weight 0.
    """
    if len(slot_weights) != len(cover.paths) or len(times) != len(cover.paths):
        raise ValueError("need one weight array and one time per path")
    L = cover.num_qubits
    acc: dict[Edge, float] = {}
    for p, disabled, weights, t in zip(cover.paths, cover.disabled_slots, slot_weights, times):
        if len(weights) != L - 1:
            raise ValueError(f"expected {L - 1} slot weights, got {len(weights)}")
        for slot, w in enumerate(weights):
            if slot in disabled:
                if w != 0.0:
                    raise ValueError(f"disabled slot {slot} must have weight 0")
                continue
            edge = canonical_edge(p[slot], p[slot + 1], L)
            acc[edge] = acc.get(edge, 0.0) + float(t) * float(w)
    return CouplingGraph(L, acc)
