import random
from math import comb, gcd

import pytest

from homocalc import ChainComplex, FgAbGroup, IntMatrix, direct_sum, tensor
from homocalc.derived import (
    derived_hom,
    derived_tensor,
    ext,
    free_resolution,
    is_resolution_of,
    koszul,
    tensor_group,
    tor,
)

from oracles import complex_homology_oracle, cokernel_oracle, homology_oracle_at

G = FgAbGroup.parse
Z = G("Z")
O = FgAbGroup()


def random_group(rng):
    orders = [rng.choice([0, 2, 3, 4, 6, 9]) for _ in range(rng.randint(0, 3))]
    return FgAbGroup.from_orders(orders, rng.randint(0, 1))


def test_free_resolution_examples():
    assert free_resolution(G("Z/2")).complex == ChainComplex.two_term([[2]])
    assert free_resolution(G("Z^3")).complex == ChainComplex.concentrated(3, 0)
    R = free_resolution(G("Z+Z/6")).complex
    assert R.ranks == {0: 2, 1: 1}
    assert cokernel_oracle(R.d(1).tolist(), 2) == G("Z+Z/6")
    assert free_resolution(O).complex.is_zero()


def test_free_resolution_always_resolves():
    rng = random.Random(1)
    for _ in range(40):
        A = random_group(rng)
        R = free_resolution(A)
        assert R.augmentation_target == A
        assert is_resolution_of(R.complex, A)


def test_is_resolution_of_examples():
    assert is_resolution_of(ChainComplex.two_term([[2]]), G("Z/2"))
    assert not is_resolution_of(ChainComplex.two_term([[0]]), G("Z/2"))
    assert is_resolution_of(koszul([2, 3]), O)


@pytest.mark.parametrize("a,b", [(4, 6), (3, 5), (6, 6), (2, 2)])
def test_tor_of_cyclic_groups(a, b):
    A, B = G(f"Z/{a}"), G(f"Z/{b}")
    g = gcd(a, b)
    expected = FgAbGroup.from_orders([g] if g > 1 else [])
    assert tor(A, B, 1) == expected
    assert tor(A, B, 0) == expected
    # oracle: hand-written Z -> Z^2 -> Z
    assert homology_oracle_at([[b, a]], [[-a], [b]], 2) == expected


def test_tor_free_is_flat():
    rng = random.Random(2)
    for r in (1, 2, 3):
        B = random_group(rng)
        A = FgAbGroup(r)
        assert tor(A, B, 0) == B * r
        assert tor(A, B, 1).is_trivial()


def test_derived_tensor_examples():
    assert derived_tensor(Z, Z) == ChainComplex.concentrated(1, 0)
    H = derived_tensor(G("Z/2"), G("Z/2")).homology()
    assert [str(H[i]) for i in range(3)] == ["Z/2", "Z/2", "0"]


def test_tor_symmetry_vanishing_and_tensor_group():
    rng = random.Random(3)
    for _ in range(40):
        A, B = random_group(rng), random_group(rng)
        D = derived_tensor(A, B)
        assert D.homology() == derived_tensor(B, A).homology()
        assert D.homology() == complex_homology_oracle(D)
        for i in range(4):
            assert tor(A, B, i) == tor(B, A, i)
        assert tor(A, B, 2).is_trivial() and tor(A, B, 3).is_trivial()
        assert tor(A, B, 0) == tensor_group(A, B)


def test_tor_negative_degree():
    with pytest.raises(ValueError):
        tor(Z, Z, -1)
    with pytest.raises(ValueError):
        ext(Z, Z, -1)


def test_resolution_independence():
    rng = random.Random(4)
    pad = ChainComplex.two_term([[1]])
    for _ in range(20):
        A, B = random_group(rng), random_group(rng)
        P = direct_sum(free_resolution(A).complex, pad)
        assert is_resolution_of(P, A)
        T = tensor(P, free_resolution(B).complex)
        for i in range(3):
            assert T.homology_at(i) == tor(A, B, i)


def test_ext_examples():
    rng = random.Random(5)
    for _ in range(5):
        B = random_group(rng)
        assert ext(Z, B, 0) == B
        assert ext(Z, B, 1).is_trivial()
    for n in (2, 6):
        assert ext(G(f"Z/{n}"), Z, 1) == G(f"Z/{n}")
        assert cokernel_oracle(IntMatrix([[n]]).T.tolist(), 1) == G(f"Z/{n}")


def test_ext_between_torsion_groups():
    assert ext(G("Z/4"), G("Z/6"), 0) == G("Z/2")
    assert ext(G("Z/4"), G("Z/6"), 1) == G("Z/2")
    assert ext(G("Z/2"), G("Z/3"), 1).is_trivial()
    assert ext(G("Z/3"), Z, 0).is_trivial()


def test_ext_vanishes_above_one():
    rng = random.Random(6)
    for _ in range(30):
        A, B = random_group(rng), random_group(rng)
        H = derived_hom(A, B).homology()
        assert all(H[-i].is_trivial() for i in range(2, 4))
        assert all(H[i].is_trivial() for i in range(1, 3))


def test_koszul_examples():
    assert koszul([2]) == ChainComplex.two_term([[2]])
    assert koszul([2, 3]).homology().is_zero()
    H = koszul([2, 4]).homology()
    assert [str(H[i]) for i in range(3)] == ["Z/2", "Z/2", "0"]
    with pytest.raises(ValueError):
        koszul([])


def test_koszul_ranks_and_validity():
    rng = random.Random(7)
    for r in range(1, 6):
        s = [rng.randint(-6, 6) for _ in range(r)]
        K = koszul(s)
        K.validate()
        assert [K.rank(k) for k in range(r + 1)] == [comb(r, k) for k in range(r + 1)]


def test_koszul_matrices():
    K = koszul([2, 3, 5])
    assert K.d(1) == IntMatrix([[2, 3, 5]])
    # columns {0,1}, {0,2}, {1,2}; rows {0}, {1}, {2}
    assert K.d(2) == IntMatrix([[-3, -5, 0], [2, 0, -5], [0, 2, 3]])
