"""Stabilizer tracking under braid-generator conjugation.

The state |0...0> is stabilized by {+Z_1, ..., +Z_N} (signs chosen so
every generator has eigenvalue +1 in the standard basis).  Conjugating by
the braid generator on strands (i, i+1) uses the rotation form

    t_i = (1 + g_{2i-1} g_{2i+1}) / sqrt(2),

whose action on a Pauli string P is: P unchanged if P commutes with the
bilinear b = g_{2i-1} g_{2i+1} (equal to -i Y_i X_{i+1}), else P -> b P.
The inverse generator acquires -b instead.  Every sign is tracked exactly.

Layout: the set is stored column-major.  For each qubit j there is an
x-column and a z-column, integers whose bit k carries generator k's
letter bits, plus two integers holding the low/high bits of each
generator's phase exponent (mod 4).  One conjugation step touches only
the two columns at (i, i+1) and the phase planes, so a length-L word
costs O(L * N / 64) machine words and the whole set O(N^2) bits.
"""

from __future__ import annotations

from .braid import BraidWord, Permutation
from .pauli import PauliString, majorana

__all__ = [
    "StabilizerSet",
    "MajoranaPairing",
    "initial_stabilizers",
    "conjugate_by_generator",
    "conjugate_by_word",
    "conjugate_pauli",
    "majorana_pairing",
]


class StabilizerSet:
    """N independent commuting signed Pauli strings on N qubits.

    Value semantics: the conjugation functions return new sets and never
    mutate their input.  Build instances with :func:`initial_stabilizers`
    or :meth:`from_generators`.
    """

    __slots__ = ("n_qubits", "_xcols", "_zcols", "_p0", "_p1")

    def __init__(self, n_qubits: int, xcols: list[int], zcols: list[int],
                 p0: int, p1: int):
        self.n_qubits = n_qubits
        self._xcols = xcols
        self._zcols = zcols
        self._p0 = p0
        self._p1 = p1

    @classmethod
    def from_generators(cls, generators, validate: bool = True) -> "StabilizerSet":
        """Build a set from N Pauli strings on N qubits.

        With ``validate`` the generators must be Hermitian, pairwise
        commuting, and independent over GF(2).
        """
        gens = list(generators)
        if not gens:
            raise ValueError("need at least one generator")
        n = gens[0].n_qubits
        if len(gens) != n:
            raise ValueError(f"need exactly {n} generators for {n} qubits")
        if any(g.n_qubits != n for g in gens):
            raise ValueError("generators must share one qubit count")
        if validate:
            if any(not g.is_hermitian for g in gens):
                raise ValueError("stabilizer generators must be Hermitian")
            for a in range(n):
                for b in range(a + 1, n):
                    if not gens[a].commutes(gens[b]):
                        raise ValueError(
                            f"generators {a + 1} and {b + 1} do not commute"
                        )
            if _gf2_rank([g.x | (g.z << n) for g in gens]) != n:
                raise ValueError("generators are not independent")
        xcols = [0] * n
        zcols = [0] * n
        p0 = p1 = 0
        for k, g in enumerate(gens):
            bit = 1 << k
            for j in range(n):
                if (g.x >> j) & 1:
                    xcols[j] |= bit
                if (g.z >> j) & 1:
                    zcols[j] |= bit
            if g.phase_exponent & 1:
                p0 |= bit
            if g.phase_exponent & 2:
                p1 |= bit
        return cls(n, xcols, zcols, p0, p1)

    @property
    def generators(self) -> tuple[PauliString, ...]:
        """The generators as Pauli strings, in tableau order."""
        n = self.n_qubits
        out = []
        for k in range(n):
            x = z = 0
            for j in range(n):
                x |= ((self._xcols[j] >> k) & 1) << j
                z |= ((self._zcols[j] >> k) & 1) << j
            e = ((self._p0 >> k) & 1) + 2 * ((self._p1 >> k) & 1)
            out.append(PauliString(n, x, z, e))
        return tuple(out)

    def copy(self) -> "StabilizerSet":
        return StabilizerSet(self.n_qubits, list(self._xcols), list(self._zcols),
                             self._p0, self._p1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StabilizerSet):
            return NotImplemented
        return (self.n_qubits == other.n_qubits
                and self._xcols == other._xcols
                and self._zcols == other._zcols
                and self._p0 == other._p0
                and self._p1 == other._p1)

    def __str__(self) -> str:
        return "\n".join(str(g) for g in self.generators)

    def all_commute(self) -> bool:
        gens = self.generators
        return all(
            gens[a].commutes(gens[b])
            for a in range(len(gens))
            for b in range(a + 1, len(gens))
        )

    def is_independent(self) -> bool:
        """True iff no nonempty subset multiplies to a phase times identity."""
        n = self.n_qubits
        return _gf2_rank([g.x | (g.z << n) for g in self.generators]) == n


def _gf2_rank(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                rank += 1
                break
            row ^= pivots[top]
    return rank


def initial_stabilizers(n_qubits: int) -> StabilizerSet:
    """The stabilizer set of |0...0>: generator j is +Z on qubit j."""
    if n_qubits < 1:
        raise ValueError("need at least one qubit")
    xcols = [0] * n_qubits
    zcols = [1 << j for j in range(n_qubits)]
    return StabilizerSet(n_qubits, xcols, zcols, 0, 0)


def conjugate_by_word(s: StabilizerSet, word: BraidWord) -> StabilizerSet:
    """Conjugate every generator by the word, leftmost letter first."""
    if word.n_strands != s.n_qubits:
        raise ValueError(
            f"word on {word.n_strands} strands vs {s.n_qubits} qubits"
        )
    xc = list(s._xcols)
    zc = list(s._zcols)
    p0 = s._p0
    p1 = s._p1
    for index, exponent in word.letters:
        q = index - 1
        xi = xc[q]
        zi = zc[q]
        xj = xc[q + 1]
        zj = zc[q + 1]
        a = xi ^ zi ^ zj          # generators anticommuting with Y_i X_{i+1}
        if not a:
            continue
        # acquired scalar: -i (exp +1) or +i (exp -1), i.e. add 3 or 1 mod 4
        if exponent > 0:
            c = p0 & a
            p0 ^= a
            p1 ^= c ^ a
        else:
            c = p0 & a
            p0 ^= a
            p1 ^= c
        # left-multiplication phase at qubit i (left letter Y): X +3, Z +1
        m = xi & ~zi & a
        if m:
            c = p0 & m
            p0 ^= m
            p1 ^= c ^ m
        m = zi & ~xi & a
        if m:
            c = p0 & m
            p0 ^= m
            p1 ^= c
        # at qubit i+1 (left letter X): Z +3, Y +1
        m = zj & ~xj & a
        if m:
            c = p0 & m
            p0 ^= m
            p1 ^= c ^ m
        m = zj & xj & a
        if m:
            c = p0 & m
            p0 ^= m
            p1 ^= c
        xc[q] = xi ^ a
        zc[q] = zi ^ a
        xc[q + 1] = xj ^ a
    return StabilizerSet(s.n_qubits, xc, zc, p0, p1)


def conjugate_by_generator(s: StabilizerSet, i: int, exponent: int = 1) -> StabilizerSet:
    """Conjugate every generator by t_i (exponent +1) or its inverse."""
    if not 1 <= i <= s.n_qubits - 1:
        raise ValueError(f"generator index {i} out of range 1..{s.n_qubits - 1}")
    return conjugate_by_word(s, BraidWord(s.n_qubits, ((i, exponent),)))


def conjugate_pauli(p: PauliString, i: int, exponent: int = 1) -> PauliString:
    """Conjugate a single Pauli string by t_i^(exponent).

    Reference implementation of the same rule the tableau applies column-wise.
    """
    n = p.n_qubits
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    if exponent not in (1, -1):
        raise ValueError("exponent must be +1 or -1")
    b = majorana(2 * i - 1, n) * majorana(2 * i + 1, n)
    if p.commutes(b):
        return p
    return b * p if exponent > 0 else -(b * p)


class MajoranaPairing:
    """How each even Majorana index is paired after braiding.

    Entry j (0-based) is ``(2j+2, odd, sign)``: generator j equals
    sign * i * gamma_{2j+2} * gamma_odd.  The odd indices across entries
    form a permutation of {1, 3, ..., 2N-1}.
    """

    __slots__ = ("n_qubits", "entries")

    def __init__(self, n_qubits: int, entries: tuple[tuple[int, int, int], ...]):
        odds = sorted(odd for _, odd, _ in entries)
        if odds != list(range(1, 2 * n_qubits, 2)):
            raise ValueError("odd indices do not form a permutation")
        self.n_qubits = n_qubits
        self.entries = entries

    def site_permutation(self) -> Permutation:
        """The strand permutation: site of the even index -> site of its odd."""
        return Permutation(tuple((odd + 1) // 2 for _, odd, _ in self.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MajoranaPairing):
            return NotImplemented
        return self.n_qubits == other.n_qubits and self.entries == other.entries

    def __repr__(self) -> str:
        return f"MajoranaPairing({self.n_qubits}, {self.entries!r})"


def majorana_pairing(s: StabilizerSet) -> MajoranaPairing:
    """Recover the even/odd Majorana pairing from a post-braiding set.

    Each generator must be +/- i gamma_even gamma_odd with the even index
    fixed by its tableau position; anything else raises ValueError, which
    signals the set did not come from this pipeline.
    """
    n = s.n_qubits
    entries = []
    for k, g in enumerate(s.generators):
        even = 2 * (k + 1)
        # if g = sign * i * gamma_even * gamma_odd then
        # -i * gamma_even * g = sign * gamma_odd
        h = majorana(even, n) * g
        h = PauliString(n, h.x, h.z, h.phase_exponent + 3)
        j = h.x.bit_length()
        if (
            h.x == 0
            or h.x != 1 << (j - 1)
            or h.z != (1 << (j - 1)) - 1
            or h.phase_exponent % 2 != 0
        ):
            raise ValueError(
                f"generator {k + 1} ({g}) is not +/- i*gamma_even*gamma_odd"
            )
        sign = 1 if h.phase_exponent == 0 else -1
        entries.append((even, 2 * j - 1, sign))
    return MajoranaPairing(n, tuple(entries))
