"""Brute-force ground truth: dense state vectors and separability for small N.

Basis convention: qubit 1 is the most significant bit of the amplitude
index and |0> is bit value 0, so |0...0> is index 0.  Matching the Pauli
module, Z|0> = +|0>.

Everything here scales as 2^N and is gated by an explicit limit
(default 14 qubits for states, much less for full operator matrices).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .braid import BraidWord
from .classify import EntanglementPartition
from .pauli import PauliString
from .stabilizer import StabilizerSet

__all__ = [
    "ResourceLimitError",
    "DEFAULT_ORACLE_LIMIT",
    "StateVector",
    "apply_word",
    "apply_pauli",
    "check_stabilized",
    "stabilizer_residual",
    "bipartition_purity",
    "dump_amplitudes",
    "finest_product_partition",
    "pauli_to_matrix",
    "generator_unitary",
    "word_unitary",
]

DEFAULT_ORACLE_LIMIT = 14

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_LETTER_MATRIX = {"I": _I2, "X": _X, "Y": _Y, "Z": _Z}


class ResourceLimitError(RuntimeError):
    """A dense computation would exceed the configured qubit limit."""


@dataclass(eq=False)
class StateVector:
    """A normalized pure state on ``n_qubits`` qubits."""

    n_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (2 ** self.n_qubits,):
            raise ValueError(
                f"expected {2 ** self.n_qubits} amplitudes, got {amps.shape}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state is not normalized: |norm - 1| = {abs(norm - 1):.3e}")
        self.amplitudes = amps


def _check_limit(n_qubits: int, limit: int) -> None:
    if n_qubits > limit:
        raise ResourceLimitError(
            f"{n_qubits} qubits exceeds the dense-oracle limit of {limit}"
        )


def generator_unitary(exponent: int = 1) -> np.ndarray:
    """The 4x4 braid gate on adjacent qubits: (I -i Y(x)X)/sqrt(2) or its inverse."""
    if exponent not in (1, -1):
        raise ValueError("exponent must be +1 or -1")
    yx = np.kron(_Y, _X)
    return (np.eye(4, dtype=complex) - 1j * exponent * yx) / np.sqrt(2.0)


def apply_word(word: BraidWord, n_qubits: int | None = None, *,
               limit: int = DEFAULT_ORACLE_LIMIT) -> StateVector:
    """Apply the word's gates to |0...0>, leftmost letter first."""
    n = word.n_strands if n_qubits is None else n_qubits
    if n < word.n_strands:
        raise ValueError(
            f"word needs {word.n_strands} strands, got n_qubits={n}"
        )
    _check_limit(n, limit)
    state = np.zeros(2 ** n, dtype=complex)
    state[0] = 1.0
    gate_pos = generator_unitary(1)
    gate_neg = generator_unitary(-1)
    for i, exponent in word.letters:
        gate = gate_pos if exponent > 0 else gate_neg
        # qubits (i, i+1) are adjacent axes; qubit i is the higher bit
        block = state.reshape(2 ** (i - 1), 4, 2 ** (n - i - 1))
        state = np.einsum("ab,xby->xay", gate, block).reshape(-1)
    return StateVector(n, state)


def _index_mask(mask: int, n: int) -> int:
    """Map a qubit bit mask (bit j-1 = qubit j) to amplitude-index bits."""
    out = 0
    for j in range(1, n + 1):
        if (mask >> (j - 1)) & 1:
            out |= 1 << (n - j)
    return out


def _bit_parity(values: np.ndarray) -> np.ndarray:
    v = values.copy()
    for shift in (32, 16, 8, 4):
        v ^= v >> shift
    return (0x6996 >> (v & 0xF)) & 1


def apply_pauli(p: PauliString, state: StateVector) -> np.ndarray:
    """Amplitudes of p|psi>, computed without materializing the matrix."""
    n = state.n_qubits
    if p.n_qubits != n:
        raise ValueError(f"operator on {p.n_qubits} qubits vs state on {n}")
    xm = _index_mask(p.x, n)
    zm = _index_mask(p.z, n)
    idx = np.arange(2 ** n, dtype=np.int64)
    src = idx ^ xm
    # per basis state: phase * i^(#Y) * (-1)^(parity of z-mask overlap)
    coeff = p.phase.value * (1j) ** (p.x & p.z).bit_count()
    signs = 1.0 - 2.0 * _bit_parity(src & zm)
    return coeff * signs * state.amplitudes[src]


def stabilizer_residual(state: StateVector, s: StabilizerSet) -> float:
    """max_g || g|psi> - |psi> ||_2 over the generators."""
    if s.n_qubits != state.n_qubits:
        raise ValueError(f"set on {s.n_qubits} qubits vs state on {state.n_qubits}")
    return max(
        float(np.linalg.norm(apply_pauli(g, state) - state.amplitudes))
        for g in s.generators
    )


def check_stabilized(state: StateVector, s: StabilizerSet,
                     tol: float = 1e-10) -> bool:
    """True iff every generator fixes the state with eigenvalue +1."""
    return stabilizer_residual(state, s) < tol


def bipartition_purity(state: StateVector, sites) -> float:
    """Tr(rho_A^2) for the reduced state on the given sites.

    Equals 1 exactly when the pure state factors across the bipartition.
    """
    n = state.n_qubits
    a_sites = sorted(set(sites))
    if not a_sites or len(a_sites) >= n:
        raise ValueError("sites must be a nonempty proper subset of 1..n")
    if a_sites[0] < 1 or a_sites[-1] > n:
        raise ValueError(f"sites out of range 1..{n}")
    rest = [j for j in range(1, n + 1) if j not in set(a_sites)]
    tensor = state.amplitudes.reshape((2,) * n)
    axes = [j - 1 for j in a_sites] + [j - 1 for j in rest]
    m = np.transpose(tensor, axes).reshape(2 ** len(a_sites), 2 ** len(rest))
    if m.shape[0] <= m.shape[1]:
        gram = m @ m.conj().T
    else:
        gram = m.conj().T @ m
    return float(np.sum(np.abs(gram) ** 2).real)


def finest_product_partition(state: StateVector, *, tol: float = 1e-10,
                             limit: int = DEFAULT_ORACLE_LIMIT) -> EntanglementPartition:
    """The finest partition across which the state is a tensor product.

    Each block is split at any bipartition with purity >= 1 - tol until
    no block splits; for the stabilizer-reachable states handled here the
    separable/entangled purity gap is macroscopic, so the threshold is
    not delicate.
    """
    n = state.n_qubits
    _check_limit(n, limit)
    pending = [tuple(range(1, n + 1))]
    done: list[tuple[int, ...]] = []
    while pending:
        block = pending.pop()
        split = _find_split(state, block, tol)
        if split is None:
            done.append(block)
        else:
            rest = tuple(s for s in block if s not in set(split))
            pending.append(split)
            pending.append(rest)
    return EntanglementPartition.from_blocks(done)


def _find_split(state: StateVector, block: tuple[int, ...],
                tol: float) -> tuple[int, ...] | None:
    if len(block) < 2:
        return None
    head, *rest = block
    for size in range(0, len(block) - 1):
        for combo in combinations(rest, size):
            part = (head,) + combo
            if bipartition_purity(state, part) >= 1.0 - tol:
                return part
    return None


def dump_amplitudes(state: StateVector) -> str:
    """Debug dump, one line per basis state: index, bitstring, re, im."""
    n = state.n_qubits
    return "\n".join(
        f"{k} {k:0{n}b} {float(amp.real)!r} {float(amp.imag)!r}"
        for k, amp in enumerate(state.amplitudes)
    )


def pauli_to_matrix(p: PauliString) -> np.ndarray:
    """Dense matrix of a Pauli string (qubit 1 = most significant bit)."""
    out = np.array([[p.phase.value]], dtype=complex)
    for ch in p.letters:
        out = np.kron(out, _LETTER_MATRIX[ch])
    return out


def word_unitary(word: BraidWord, n_qubits: int | None = None, *,
                 limit: int = 10) -> np.ndarray:
    """The full 2^N unitary of a word (rightmost letter leftmost as operator)."""
    n = word.n_strands if n_qubits is None else n_qubits
    if n < word.n_strands:
        raise ValueError(f"word needs {word.n_strands} strands, got n_qubits={n}")
    _check_limit(n, limit)
    total = np.eye(2 ** n, dtype=complex)
    for i, exponent in word.letters:
        gate = generator_unitary(exponent)
        full = np.kron(
            np.kron(np.eye(2 ** (i - 1), dtype=complex), gate),
            np.eye(2 ** (n - i - 1), dtype=complex),
        )
        total = full @ total
    return total
