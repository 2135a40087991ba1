"""Independent reference implementations used as test oracles.

These deliberately avoid the package's own embedding and evolution code:
gates embed via explicit Kronecker chains, evolutions go through
scipy.linalg.expm, and the zig-zag paths come from the literal walk
construction instead of the closed form.
"""

import numpy as np
from scipy.linalg import expm

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)


def kron_embed(mat: np.ndarray, qubit: int, num_qubits: int) -> np.ndarray:
    """Single-qubit operator on `qubit` (qubit 0 = least significant bit)."""
    out = np.eye(1, dtype=complex)
    for q in reversed(range(num_qubits)):
        out = np.kron(out, mat if q == qubit else I2)
    return out


def pauli_z(qubit: int, num_qubits: int) -> np.ndarray:
    return kron_embed(Z, qubit, num_qubits)


def two_site(mat_high: np.ndarray, mat_low: np.ndarray, low: int, num_qubits: int) -> np.ndarray:
    return kron_embed(mat_high, low + 1, num_qubits) @ kron_embed(mat_low, low, num_qubits)


def zz_hamiltonian(angles: dict, num_qubits: int) -> np.ndarray:
    """Dense sum of phi_uv Z_u Z_v over an arbitrary edge set."""
    dim = 1 << num_qubits
    h = np.zeros((dim, dim), dtype=complex)
    for (u, v), phi in angles.items():
        h += phi * pauli_z(u, num_qubits) @ pauli_z(v, num_qubits)
    return h


def evolution(h: np.ndarray) -> np.ndarray:
    return expm(1j * h)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-ish random unitary via QR of a complex Ginibre matrix."""
    ginibre = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(ginibre)
    return q @ np.diag(r.diagonal() / np.abs(r.diagonal()))


def zigzag_walk(k: int, num_qubits: int) -> tuple:
    """Literal walk construction: forward 1, back 2, forward 3, ... rotated by k-1."""
    pos = 0
    walk = [0]
    for step in range(1, num_qubits):
        pos = pos + step if step % 2 == 1 else pos - step
        walk.append(pos % num_qubits)
    return tuple((v + k - 1) % num_qubits for v in walk)
