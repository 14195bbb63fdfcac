"""braident: which qubit sites does a braid word entangle?

Applies the local unitary braid representation t_i = (1 - i Y_i X_{i+1})
/ sqrt(2) to |0...0>, tracks the stabilizer set exactly under
conjugation, predicts the entanglement partition of the resulting state
from the braid word's strand permutation alone, and can verify the
prediction against a dense state-vector oracle at small qubit counts.
"""

from .braid import (
    BraidSyntaxError,
    BraidWord,
    CycleDecomposition,
    GeneratorRangeError,
    Permutation,
    parse_word,
    permutation_of,
    render_word,
    word_for_permutation,
)
from .classify import (
    EntanglementPartition,
    classify_word,
    interleaves,
    predict_partition,
)
from .oracle import (
    DEFAULT_ORACLE_LIMIT,
    ResourceLimitError,
    StateVector,
    apply_pauli,
    apply_word,
    bipartition_purity,
    check_stabilized,
    finest_product_partition,
    pauli_to_matrix,
    stabilizer_residual,
)
from .pauli import PauliString, Phase, majorana, majorana_bilinear
from .stabilizer import (
    MajoranaPairing,
    StabilizerSet,
    conjugate_by_generator,
    conjugate_by_word,
    conjugate_pauli,
    initial_stabilizers,
    majorana_pairing,
)

__version__ = "0.1.0"

__all__ = [
    "BraidSyntaxError",
    "BraidWord",
    "CycleDecomposition",
    "DEFAULT_ORACLE_LIMIT",
    "EntanglementPartition",
    "GeneratorRangeError",
    "MajoranaPairing",
    "PauliString",
    "Permutation",
    "Phase",
    "ResourceLimitError",
    "StabilizerSet",
    "StateVector",
    "apply_pauli",
    "apply_word",
    "bipartition_purity",
    "check_stabilized",
    "classify_word",
    "conjugate_by_generator",
    "conjugate_by_word",
    "conjugate_pauli",
    "finest_product_partition",
    "initial_stabilizers",
    "interleaves",
    "majorana",
    "majorana_bilinear",
    "majorana_pairing",
    "parse_word",
    "pauli_to_matrix",
    "permutation_of",
    "predict_partition",
    "render_word",
    "stabilizer_residual",
    "word_for_permutation",
]
