"""Digital-analog compiler for all-to-all ZZ Ising evolutions.

Compiles exp(i t H) for an arbitrary symmetric ZZ coupling graph into a
schedule of evolutions under a fixed nearest-neighbour chain, interleaved
with single-qubit rotations, plus an exact dense-unitary verifier for small
qubit counts.
"""

from .circuits import (
    AnalogRequest,
    Circuit,
    DigitalLayer,
    Gate,
    GateType,
    GeneralSwap,
    ResourceBlock,
    ScheduleStats,
    ata_circuit,
    ata_circuit_general,
    ata_circuit_per_path,
    bridge_layers,
    circuit_stats,
    general_swap,
    lower_iswap_layer,
    lower_swap_layers,
)
from .compiler import CompileResult, compile_ata, compile_chain, schedule_requests
from .errors import FileFormatError, QubitLimitError, UnschedulableError
from .graphs import (
    CouplingGraph,
    NNChain,
    PathCover,
    compose_weighted_paths,
    path_edges,
    walecki_cover,
    walecki_paths,
    walecki_paths_odd,
    zigzag_path,
)
from .scheduler import (
    BlockSchedule,
    NormalizationRecord,
    coupling_ratios,
    mask_from_row,
    minimum_time,
    normalize_ratios,
    schedule,
    sign_matrix,
    sign_matrix_inverse,
    solve_block_times,
)
from .swaps import (
    SwapSequence,
    apply_sequence,
    head_ladders,
    identity_permutation,
    sort_network_sequence,
    swap_ladder,
    tail_ladders,
    walecki_sequence,
)
from .unitaries import (
    DistanceReport,
    circuit_unitary,
    exact_target,
    gate_unitary,
    general_swap_unitary,
    is_unitary,
    phase_distance,
    zz_evolution,
)

__version__ = "0.1.0"
