"""Braid words over B_N, their strand permutations, and cycle decompositions.

Word grammar (whitespace-insensitive)::

    word    := (letter ws*)*
    letter  := ("s" | "S") integer ("^-1" | "'")?
    integer := [1-9][0-9]*

An uppercase ``S`` and a trailing ``^-1`` or ``'`` each mark an inverse;
two markers on one letter cancel.  The leftmost letter of a word acts on
the state first, so as an operator a word reads right-to-left.

A :class:`Permutation` maps each strand to the position where it ends;
all indices are 1-based.  ``compose`` follows the same order convention
as words: ``p.compose(q)`` applies ``p`` first.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "BraidSyntaxError",
    "GeneratorRangeError",
    "BraidWord",
    "Permutation",
    "CycleDecomposition",
    "parse_word",
    "render_word",
    "permutation_of",
    "word_for_permutation",
]


class BraidSyntaxError(ValueError):
    """Malformed braid word text; ``position`` is the 1-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"column {position}: {message}")
        self.position = position


class GeneratorRangeError(BraidSyntaxError):
    """Generator index too large for the strand count."""


@dataclass(frozen=True)
class BraidWord:
    """A sequence of signed generators (index, exponent) on N strands."""

    n_strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n_strands < 1:
            raise ValueError("need at least one strand")
        for index, exponent in self.letters:
            if not 1 <= index <= self.n_strands - 1:
                raise ValueError(
                    f"generator s{index} needs at least {index + 1} strands"
                )
            if exponent not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {exponent}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if self.n_strands != other.n_strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.n_strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        """The word undoing this one: reversed order, flipped exponents."""
        return BraidWord(
            self.n_strands, tuple((i, -e) for i, e in reversed(self.letters))
        )

    def __str__(self) -> str:
        return render_word(self)


def parse_word(text: str, n_strands: int) -> BraidWord:
    """Parse braid word text against the grammar above.

    Raises :class:`BraidSyntaxError` with the offending column, or
    :class:`GeneratorRangeError` when an index is >= n_strands.
    """
    if n_strands < 1:
        raise ValueError("need at least one strand")
    letters: list[tuple[int, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in "sS":
            raise BraidSyntaxError(f"expected 's', found {ch!r}", i + 1)
        inverse = ch == "S"
        i += 1
        start = i
        while i < n and text[i].isdigit():
            i += 1
        digits = text[start:i]
        if not digits or digits[0] == "0":
            raise BraidSyntaxError("expected a generator index (no leading zero)",
                                   start + 1)
        if i < n and text[i] == "'":
            inverse = not inverse
            i += 1
        elif text[i:i + 3] == "^-1":
            inverse = not inverse
            i += 3
        elif i < n and text[i] == "^":
            raise BraidSyntaxError("only '^-1' is allowed after a generator", i + 1)
        index = int(digits)
        if index >= n_strands:
            raise GeneratorRangeError(
                f"generator s{index} out of range for {n_strands} strands", start + 1
            )
        letters.append((index, -1 if inverse else 1))
    return BraidWord(n_strands, tuple(letters))


def render_word(word: BraidWord) -> str:
    """Canonical text form: lowercase s, explicit ^-1, space-separated."""
    return " ".join(
        f"s{i}" if e > 0 else f"s{i}^-1" for i, e in word.letters
    )


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; ``image[k-1]`` is where strand k ends."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.image)}: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        """Build from disjoint cycles, e.g. from_cycles(4, [(1, 3), (2, 4)])."""
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = tuple(cycle)
            for k, site in enumerate(cycle):
                if site in seen or not 1 <= site <= n:
                    raise ValueError(f"bad cycle element {site}")
                seen.add(site)
                image[site - 1] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, k: int) -> int:
        return self.image[k - 1]

    @property
    def is_identity(self) -> bool:
        return all(v == k + 1 for k, v in enumerate(self.image))

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other (word-order composition)."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(other.image[v - 1] for v in self.image))

    def inverse(self) -> "Permutation":
        image = [0] * self.n
        for k, v in enumerate(self.image):
            image[v - 1] = k + 1
        return Permutation(tuple(image))

    def cycles(self) -> "CycleDecomposition":
        """Disjoint cycles, min element first, sorted by minima.

        Fixed points appear as singleton cycles.
        """
        out: list[tuple[int, ...]] = []
        seen = [False] * self.n
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cycle = []
            k = start
            while not seen[k - 1]:
                seen[k - 1] = True
                cycle.append(k)
                k = self.image[k - 1]
            out.append(tuple(cycle))
        return CycleDecomposition(self.n, tuple(out))


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles covering {1..n}, in the canonical order above."""

    n: int
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        flat = [s for c in self.cycles for s in c]
        if sorted(flat) != list(range(1, self.n + 1)):
            raise ValueError("cycles must partition 1..n")

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def permutation_of(word: BraidWord) -> Permutation:
    """The strand permutation of a word; exponent signs are irrelevant.

    Each letter s_i swaps the strands currently at positions i and i+1,
    leftmost letter first.
    """
    n = word.n_strands
    pos_to_strand = list(range(n + 1))   # index 0 unused
    strand_to_pos = list(range(n + 1))
    for i, _ in word.letters:
        a = pos_to_strand[i]
        b = pos_to_strand[i + 1]
        pos_to_strand[i] = b
        pos_to_strand[i + 1] = a
        strand_to_pos[a] = i + 1
        strand_to_pos[b] = i
    return Permutation(tuple(strand_to_pos[1:]))


def word_for_permutation(p: Permutation) -> BraidWord:
    """Some word whose strand permutation equals ``p``.

    Bubble-sort decomposition into adjacent transpositions; O(n^2) letters
    worst case, all with exponent +1.  Not minimal.
    """
    # target arrangement: position j ends up holding strand p^{-1}(j)
    arrangement = list(p.inverse().image)
    swaps: list[int] = []
    n = len(arrangement)
    for end in range(n, 1, -1):
        for j in range(1, end):
            if arrangement[j - 1] > arrangement[j]:
                arrangement[j - 1], arrangement[j] = arrangement[j], arrangement[j - 1]
                swaps.append(j)
    # the recorded swaps sort the target to identity; replaying them in
    # reverse builds the target from identity
    return BraidWord(p.n, tuple((j, 1) for j in reversed(swaps)))
