"""Predict which qubit sites end up entangled, from the permutation alone.

Two disjoint cycles interleave when their supports alternate somewhere:
there are a_p < b_j < a_q < b_k or b_j < a_p < b_k < a_q.  Equivalently,
walking the sorted union of both supports crosses between the two cycles
at least three times.  Sites moved by one cycle are always entangled with
each other; interleaving cycles merge into one entangled block, taking
the transitive closure over all cycles.  Fixed points stay separable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, CycleDecomposition, permutation_of

__all__ = [
    "EntanglementPartition",
    "interleaves",
    "predict_partition",
    "classify_word",
]


@dataclass(frozen=True)
class EntanglementPartition:
    """A partition of the qubit sites into maximal entangled blocks.

    Canonical form: sites ascending within a block, blocks sorted by
    their minimum.  Text form: ``{1,5}|{2,3}|{4}``.
    """

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks) -> "EntanglementPartition":
        canon = sorted(tuple(sorted(b)) for b in blocks)
        flat = [s for b in canon for s in b]
        if len(set(flat)) != len(flat):
            raise ValueError("blocks overlap")
        if not all(b for b in canon):
            raise ValueError("blocks must be nonempty")
        return cls(tuple(canon))

    @property
    def n_sites(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return "|".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def interleaves(c1, c2) -> bool:
    """True iff the two disjoint cycles' supports alternate as above.

    Singleton cycles never interleave with anything.
    """
    s1 = set(c1)
    s2 = set(c2)
    if not s1 or not s2:
        raise ValueError("cycles must be nonempty")
    if s1 & s2:
        raise ValueError(f"cycles are not disjoint: share {sorted(s1 & s2)}")
    merged = sorted((site, site in s2) for site in s1 | s2)
    crossings = sum(
        1 for (_, a), (_, b) in zip(merged, merged[1:]) if a != b
    )
    return crossings >= 3


def predict_partition(decomposition: CycleDecomposition) -> EntanglementPartition:
    """Entangled blocks = connected components of the interleaving graph.

    Singleton cycles (fixed points) always come out as singleton blocks.
    """
    cycles = decomposition.cycles
    parent = list(range(len(cycles)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(len(cycles)):
        for b in range(a + 1, len(cycles)):
            if interleaves(cycles[a], cycles[b]):
                parent[find(a)] = find(b)

    groups: dict[int, list[int]] = {}
    for k, cycle in enumerate(cycles):
        groups.setdefault(find(k), []).extend(cycle)
    return EntanglementPartition.from_blocks(groups.values())


def classify_word(word: BraidWord) -> EntanglementPartition:
    """Predicted entanglement partition of the state the word prepares."""
    return predict_partition(permutation_of(word).cycles())
