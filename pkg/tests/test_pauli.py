import random

import numpy as np
import pytest

from braident import PauliString, Phase, majorana, majorana_bilinear
from braident.oracle import pauli_to_matrix

LETTERS = "IXYZ"


def random_pauli(rng: random.Random, n: int) -> PauliString:
    return PauliString(n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4))


def test_phase_group_is_cyclic_of_order_four():
    i = Phase(1)
    powers = [i, i * i, i * i * i, i * i * i * i]
    assert [p.value for p in powers] == [1j, -1, -1j, 1]
    assert powers[-1] == Phase(0)
    assert {str(Phase(e)) for e in range(4)} == {"+", "+i", "-", "-i"}


def test_phase_conjugate():
    assert Phase(1).conjugate() == Phase(3)
    assert Phase(2).conjugate() == Phase(2)


@pytest.mark.parametrize("a", LETTERS)
@pytest.mark.parametrize("b", LETTERS)
def test_single_qubit_products_match_dense(a, b):
    p = PauliString.from_string(a)
    q = PauliString.from_string(b)
    np.testing.assert_allclose(
        pauli_to_matrix(p * q), pauli_to_matrix(p) @ pauli_to_matrix(q), atol=0
    )


def test_x_times_y_is_i_z():
    x = PauliString.from_string("X")
    y = PauliString.from_string("Y")
    assert x * y == PauliString.from_string("+iZ")


def test_identity_is_neutral():
    rng = random.Random(0)
    for _ in range(20):
        n = rng.randrange(1, 6)
        p = random_pauli(rng, n)
        e = PauliString.identity(n)
        assert e * p == p
        assert p * e == p


def test_majorana_product_single_qubit():
    # gamma_2 gamma_1 = Y X = -iZ, so i gamma_2 gamma_1 = +Z
    prod = majorana(2, 1) * majorana(1, 1)
    assert prod == PauliString.from_string("-iZ")
    np.testing.assert_allclose(
        pauli_to_matrix(prod),
        pauli_to_matrix(majorana(2, 1)) @ pauli_to_matrix(majorana(1, 1)),
        atol=0,
    )
    assert majorana_bilinear(2, 1, 1) == PauliString.from_string("+Z")


def test_multiply_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension"):
        PauliString.from_string("XX") * PauliString.from_string("X")
    with pytest.raises(ValueError, match="dimension"):
        PauliString.from_string("XX").commutes(PauliString.from_string("X"))


def test_commutes_examples():
    assert not PauliString.from_string("XI").commutes(PauliString.from_string("ZI"))
    assert PauliString.from_string("XX").commutes(PauliString.from_string("ZZ"))
    # restrictions of overlapping two-ended strings clash on one shared site
    assert not PauliString.from_string("XZ").commutes(PauliString.from_string("ZZ"))


def test_commutes_is_phase_independent():
    p = PauliString.from_string("XZ")
    assert p.commutes(PauliString.from_string("-iXZ"))


def test_commutes_matches_dense():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randrange(1, 5)
        p, q = random_pauli(rng, n), random_pauli(rng, n)
        mp, mq = pauli_to_matrix(p), pauli_to_matrix(q)
        assert p.commutes(q) == np.allclose(mp @ mq, mq @ mp)


def test_multiply_matches_dense_and_is_associative():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randrange(1, 5)
        p, q, r = (random_pauli(rng, n) for _ in range(3))
        np.testing.assert_allclose(
            pauli_to_matrix(p * q), pauli_to_matrix(p) @ pauli_to_matrix(q), atol=0
        )
        assert (p * q) * r == p * (q * r)


def test_restrict_projects_letters():
    p = PauliString.from_string("XZY")
    assert p.restrict([1, 3]) == PauliString.from_string("XY")
    assert p.restrict([3, 1]) == PauliString.from_string("YX")
    assert PauliString.from_string("-iXZY").restrict([1, 2, 3]) == p


def test_restrict_of_two_ended_strings():
    # end letters survive restriction to one end, phase reset to +1
    assert PauliString.from_string("-YZZY").restrict([1]) == PauliString.from_string("Y")
    assert majorana_bilinear(2, 5, 3).restrict([1]) == PauliString.from_string("X")


def test_restrict_errors():
    p = PauliString.from_string("XZY")
    with pytest.raises(ValueError):
        p.restrict([0, 1])
    with pytest.raises(ValueError):
        p.restrict([4])
    with pytest.raises(ValueError):
        p.restrict([1, 1])
    with pytest.raises(ValueError):
        p.restrict([])


@pytest.mark.parametrize(
    "index,n,expected",
    [
        (1, 3, "+XII"),
        (2, 3, "+YII"),
        (3, 3, "+ZXI"),
        (4, 2, "+ZY"),
        (6, 3, "+ZZY"),
        (5, 3, "+ZZX"),
    ],
)
def test_majorana_strings(index, n, expected):
    assert str(majorana(index, n)) == expected


def test_majorana_index_range():
    with pytest.raises(ValueError):
        majorana(0, 2)
    with pytest.raises(ValueError):
        majorana(5, 2)


def test_majorana_bilinear_rejects_equal_indices():
    with pytest.raises(ValueError):
        majorana_bilinear(3, 3, 2)


def test_majorana_bilinear_two_ended_patterns():
    # frozen from dense products: i g_{2a} g_{2b-1} = -X Z..Z X on sites a..b,
    # i g_{2b} g_{2a-1} = -Y Z..Z Y (a < b)
    assert majorana_bilinear(2, 3, 2) == PauliString.from_string("-XX")
    assert majorana_bilinear(4, 1, 2) == PauliString.from_string("-YY")
    assert majorana_bilinear(4, 7, 4) == PauliString.from_string("-IXZX")
    assert majorana_bilinear(8, 3, 4) == PauliString.from_string("-IYZY")


def test_majorana_bilinear_matches_dense():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randrange(1, 5)
        a, b = rng.sample(range(1, 2 * n + 1), 2)
        expected = 1j * pauli_to_matrix(majorana(a, n)) @ pauli_to_matrix(majorana(b, n))
        np.testing.assert_allclose(
            pauli_to_matrix(majorana_bilinear(a, b, n)), expected, atol=0
        )


def test_clifford_algebra_all_pairs():
    # gamma_i gamma_j = -gamma_j gamma_i for i != j; gamma_i^2 = identity
    for n in range(1, 9):
        gammas = [majorana(m, n) for m in range(1, 2 * n + 1)]
        for i, gi in enumerate(gammas):
            for j, gj in enumerate(gammas):
                if i == j:
                    assert gi * gj == PauliString.identity(n)
                else:
                    assert gi * gj == -(gj * gi)


def test_majoranas_are_hermitian():
    for n in (1, 3, 8):
        for m in range(1, 2 * n + 1):
            g = majorana(m, n)
            assert g.is_hermitian
            assert g.adjoint() == g


def test_adjoint_conjugates_phase():
    p = PauliString.from_string("+iXZ")
    assert p.adjoint() == PauliString.from_string("-iXZ")
    assert not p.is_hermitian
    rng = random.Random(4)
    for _ in range(20):
        p = random_pauli(rng, 3)
        np.testing.assert_allclose(
            pauli_to_matrix(p.adjoint()), pauli_to_matrix(p).conj().T, atol=0
        )


def test_neg_and_times_i():
    p = PauliString.from_string("XZ")
    assert -p == PauliString.from_string("-XZ")
    assert p.times_i() == PauliString.from_string("+iXZ")


def test_text_round_trip():
    rng = random.Random(5)
    for _ in range(40):
        p = random_pauli(rng, rng.randrange(1, 9))
        assert PauliString.from_string(str(p)) == p
    # prefix is optional when parsing
    assert PauliString.from_string("XZY") == PauliString.from_string("+XZY")


@pytest.mark.parametrize("bad", ["", "+", "iXZ", "X Z", "+jX", "xyz", "-i"])
def test_parse_rejects_bad_text(bad):
    with pytest.raises(ValueError):
        PauliString.from_string(bad)


def test_single_constructor():
    assert PauliString.single(3, 2, "Y") == PauliString.from_string("IYI")
    with pytest.raises(ValueError):
        PauliString.single(3, 4, "X")


def test_mask_bounds_checked():
    with pytest.raises(ValueError):
        PauliString(1, 2, 0, 0)
    with pytest.raises(ValueError):
        PauliString(0, 0, 0, 0)
