"""Exact algebra of signed Pauli strings and Majorana operators on N qubits.

A Pauli string is stored symplectically: two integer bit masks ``x`` and
``z`` (bit j-1 belongs to qubit j) plus a global phase i^e with e in
{0, 1, 2, 3}.  The letter on qubit j is decoded from its bit pair:

    (x, z) = (0, 0) -> I      (1, 0) -> X
    (0, 1) -> Z               (1, 1) -> Y

With Python's arbitrary-precision integers every operation (product,
commutation test, conjugate-transpose) costs O(n/64) machine words, so
strings on thousands of qubits stay cheap.

Majorana operators enter through the usual Z-string construction: odd
index 2j-1 maps to Z...Z X on qubit j, even index 2j to Z...Z Y.  Qubit
and Majorana indices are 1-based on every public surface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Phase",
    "PauliString",
    "majorana",
    "majorana_bilinear",
]

_PHASE_TEXT = ("+", "+i", "-", "-i")
_PHASE_VALUE = (1, 1j, -1, -1j)

# char for bit pair x + 2z
_CHAR_OF_BITS = ("I", "X", "Z", "Y")
_BITS_OF_CHAR = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}

_PAULI_RE = re.compile(r"^(\+i|-i|\+|-)?([IXYZ]+)$")


@dataclass(frozen=True)
class Phase:
    """A fourth root of unity, stored as the exponent of i (mod 4).

    Closed under multiplication, so the four values {+1, +i, -1, -i}
    form the cyclic group of order 4.
    """

    exponent: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", self.exponent % 4)

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase(self.exponent + other.exponent)

    def conjugate(self) -> "Phase":
        return Phase(-self.exponent)

    @property
    def value(self) -> complex:
        """The phase as a complex number."""
        return _PHASE_VALUE[self.exponent]

    @property
    def is_real(self) -> bool:
        return self.exponent % 2 == 0

    def __str__(self) -> str:
        return _PHASE_TEXT[self.exponent]


@dataclass(frozen=True)
class PauliString:
    """An immutable signed Pauli operator on ``n_qubits`` qubits.

    ``phase_exponent`` is the exponent of i in the global phase; ``x`` and
    ``z`` are the letter bit masks.  Use ``*`` for the operator product,
    ``-`` for negation, and ``str()`` for the text form, e.g. ``-iYZX``.
    """

    n_qubits: int
    x: int
    z: int
    phase_exponent: int = 0

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        mask = (1 << self.n_qubits) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("letter mask exceeds qubit count")
        object.__setattr__(self, "phase_exponent", self.phase_exponent % 4)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliString":
        return cls(n_qubits, 0, 0, 0)

    @classmethod
    def single(cls, n_qubits: int, site: int, letter: str) -> "PauliString":
        """The given letter on one site, identity elsewhere, phase +1."""
        if not 1 <= site <= n_qubits:
            raise ValueError(f"site {site} out of range 1..{n_qubits}")
        xb, zb = _BITS_OF_CHAR[letter]
        bit = 1 << (site - 1)
        return cls(n_qubits, xb * bit, zb * bit, 0)

    @classmethod
    def from_string(cls, text: str) -> "PauliString":
        """Parse the text form: optional prefix +, -, +i, -i, then letters.

        >>> str(PauliString.from_string("-iYZX"))
        '-iYZX'
        """
        m = _PAULI_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a Pauli string: {text!r}")
        prefix, letters = m.groups()
        e = _PHASE_TEXT.index(prefix) if prefix else 0
        x = z = 0
        for j, ch in enumerate(letters):
            xb, zb = _BITS_OF_CHAR[ch]
            x |= xb << j
            z |= zb << j
        return cls(len(letters), x, z, e)

    # -- views -------------------------------------------------------------

    @property
    def phase(self) -> Phase:
        return Phase(self.phase_exponent)

    @property
    def letters(self) -> str:
        """The unsigned letter sequence, qubit 1 first."""
        return "".join(
            _CHAR_OF_BITS[((self.x >> j) & 1) + 2 * ((self.z >> j) & 1)]
            for j in range(self.n_qubits)
        )

    def letter(self, site: int) -> str:
        if not 1 <= site <= self.n_qubits:
            raise ValueError(f"site {site} out of range 1..{self.n_qubits}")
        j = site - 1
        return _CHAR_OF_BITS[((self.x >> j) & 1) + 2 * ((self.z >> j) & 1)]

    def __str__(self) -> str:
        return _PHASE_TEXT[self.phase_exponent] + self.letters

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other: "PauliString") -> "PauliString":
        """Exact operator product with accumulated phase (XY = iZ etc.)."""
        if self.n_qubits != other.n_qubits:
            raise ValueError(
                f"dimension mismatch: {self.n_qubits} vs {other.n_qubits} qubits"
            )
        x = self.x ^ other.x
        z = self.z ^ other.z
        # per-qubit phase of letter(l)*letter(r) relative to letter(l^r),
        # summed via popcounts; see module docstring for the encoding
        e = (
            self.phase_exponent
            + other.phase_exponent
            + (self.x & self.z).bit_count()
            + (other.x & other.z).bit_count()
            + 2 * (self.z & other.x).bit_count()
            - (x & z).bit_count()
        )
        return PauliString(self.n_qubits, x, z, e)

    def __neg__(self) -> "PauliString":
        return PauliString(self.n_qubits, self.x, self.z, self.phase_exponent + 2)

    def times_i(self) -> "PauliString":
        """This operator multiplied by the scalar i."""
        return PauliString(self.n_qubits, self.x, self.z, self.phase_exponent + 1)

    def commutes(self, other: "PauliString") -> bool:
        """True iff the two operators commute; independent of phases."""
        if self.n_qubits != other.n_qubits:
            raise ValueError(
                f"dimension mismatch: {self.n_qubits} vs {other.n_qubits} qubits"
            )
        anti = (self.x & other.z).bit_count() + (self.z & other.x).bit_count()
        return anti % 2 == 0

    def adjoint(self) -> "PauliString":
        """Conjugate-transpose: letters are Hermitian, the phase conjugates."""
        return PauliString(self.n_qubits, self.x, self.z, -self.phase_exponent)

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exponent % 2 == 0

    def restrict(self, sites) -> "PauliString":
        """The sub-operator on the given distinct sites, with phase +1.

        The order of ``sites`` fixes the qubit order of the result.
        """
        sites = list(sites)
        if not sites:
            raise ValueError("need at least one site")
        if len(set(sites)) != len(sites):
            raise ValueError("sites must be distinct")
        x = z = 0
        for k, site in enumerate(sites):
            if not 1 <= site <= self.n_qubits:
                raise ValueError(f"site {site} out of range 1..{self.n_qubits}")
            j = site - 1
            x |= ((self.x >> j) & 1) << k
            z |= ((self.z >> j) & 1) << k
        return PauliString(len(sites), x, z, 0)


def majorana(index: int, n_qubits: int) -> PauliString:
    """The Majorana operator gamma_index on ``n_qubits`` qubits.

    gamma_{2j-1} = Z^(j-1) X_j and gamma_{2j} = Z^(j-1) Y_j, phase +1.
    """
    if not 1 <= index <= 2 * n_qubits:
        raise ValueError(f"Majorana index {index} out of range 1..{2 * n_qubits}")
    j = (index + 1) // 2
    x = 1 << (j - 1)
    z = (1 << (j - 1)) - 1
    if index % 2 == 0:
        z |= 1 << (j - 1)
    return PauliString(n_qubits, x, z, 0)


def majorana_bilinear(a: int, b: int, n_qubits: int) -> PauliString:
    """The fully reduced product i * gamma_a * gamma_b.

    Raises if a == b: the square is the identity, which signals misuse.
    """
    if a == b:
        raise ValueError("equal Majorana indices square to the identity")
    return (majorana(a, n_qubits) * majorana(b, n_qubits)).times_i()
