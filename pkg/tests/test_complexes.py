import random

import pytest
from hypothesis import given, settings, strategies as st

from homocalc import (
    ChainComplex,
    ComplexError,
    FgAbGroup,
    IntMatrix,
    cohomology,
    direct_sum,
    dual,
    hom_complex,
    shift,
    tensor,
)
from homocalc.derived import ext, free_resolution, koszul
from homocalc.simplicial import chain_complex, simplex_boundary

from generators import random_complex
from oracles import complex_homology_oracle, homology_oracle_at

G = FgAbGroup.parse
RES2 = ChainComplex.two_term([[2]])
UNIT = ChainComplex.concentrated(1, 0)

complexes = st.randoms(use_true_random=False).map(lambda r: random_complex(r, lo=-1, hi=2, max_rank=3))


def test_validate_examples():
    RES2.validate()
    bad = ChainComplex({0: 1, 1: 1, 2: 1}, {1: [[1]], 2: [[1]]})
    with pytest.raises(ComplexError) as exc:
        bad.validate()
    assert exc.value.degree == 2
    tet = chain_complex(simplex_boundary(3))
    tet.validate()
    # oracle: entrywise d o d
    for k in tet.support:
        a, b = tet.d(k).tolist(), tet.d(k + 1).tolist()
        for i in range(len(a)):
            for j in range(tet.rank(k + 1)):
                assert sum(a[i][m] * b[m][j] for m in range(tet.rank(k))) == 0


def test_validate_shape_error():
    C = ChainComplex({0: 1, 1: 2}, {1: [[1, 2, 3]]})
    with pytest.raises(ComplexError) as exc:
        C.validate()
    assert exc.value.degree == 1


def test_normalization_equates_explicit_zeros():
    assert ChainComplex({0: 1, 1: 1, 5: 0}) == ChainComplex({0: 1, 1: 1}, {1: [[0]]})


def test_shift_examples():
    assert shift(RES2, 0) == RES2
    S = shift(RES2, 1)
    assert S.ranks == {1: 1, 2: 1}
    assert S.d(2) == IntMatrix([[-2]])


@settings(max_examples=60, deadline=None)
@given(complexes, st.integers(-3, 3))
def test_shift_moves_homology(data, n):
    C, H = data
    assert shift(C, n).homology() == C.homology().shifted(n)


def test_homology_examples():
    H = RES2.homology()
    assert H[1].is_trivial() and str(H[0]) == "Z/2"
    assert ChainComplex().homology().is_zero()
    K = koszul([2, 4])
    assert [str(K.homology()[i]) for i in range(3)] == ["Z/2", "Z/2", "0"]
    oracle = complex_homology_oracle(K)
    assert [str(oracle[i]) for i in range(3)] == ["Z/2", "Z/2", "0"]


def test_homology_propagates_validation_failure():
    with pytest.raises(ComplexError):
        ChainComplex({0: 1, 1: 1, 2: 1}, {1: [[1]], 2: [[1]]}).homology()


def test_dual_examples():
    D = dual(RES2)
    assert D.ranks == {-1: 1, 0: 1}
    assert D.d(0) == IntMatrix([[2]])
    H = cohomology(RES2)
    assert str(H[1]) == "Z/2" and H[0].is_trivial()
    assert dual(ChainComplex()) == ChainComplex()
    assert dual(dual(RES2)) == RES2


@settings(max_examples=60, deadline=None)
@given(complexes)
def test_dual_is_involution(data):
    C, _ = data
    assert dual(dual(C)) == C
    assert dual(C).is_valid()


@settings(max_examples=60, deadline=None)
@given(complexes)
def test_euler_characteristic(data):
    C, H = data
    chi_h = sum((-1) ** (k % 2) * C.homology()[k].rank for k in C.support)
    assert C.euler_characteristic() == chi_h


@settings(max_examples=80, deadline=None)
@given(complexes)
def test_homology_matches_construction_and_oracle(data):
    C, H = data
    got = C.homology()
    assert got == H
    assert got == complex_homology_oracle(C)


def test_tensor_unit():
    C, _ = random_complex(random.Random(5))
    T = tensor(C, UNIT)
    assert T.ranks == C.ranks and T.differentials == C.differentials
    T = tensor(UNIT, C)
    assert T.ranks == C.ranks and T.differentials == C.differentials


def test_tensor_resolutions():
    T = tensor(RES2, RES2)
    T.validate()
    H = T.homology()
    assert [str(H[i]) for i in range(3)] == ["Z/2", "Z/2", "0"]
    # oracle: the complex Z -> Z^2 -> Z written out by hand
    d1, d2 = [[2, 2]], [[-2], [2]]
    assert str(homology_oracle_at([], d1, 1)) == "Z/2"
    assert str(homology_oracle_at(d1, d2, 2)) == "Z/2"
    assert T.d(1).tolist() in ([[2, 2]],) and sorted(map(abs, T.d(2).entries)) == [2, 2]


def test_tensor_ranks_and_sign():
    C = ChainComplex.two_term([[3]], degree=1)
    D = ChainComplex.two_term([[5]], degree=1)
    T = tensor(C, D)
    assert T.ranks == {0: 1, 1: 2, 2: 1}
    # basis of degree 1: C_0 (x) D_1, then C_1 (x) D_0
    assert T.d(1) == IntMatrix([[5, 3]])
    assert T.d(2) == IntMatrix([[3], [-5]])


@settings(max_examples=40, deadline=None)
@given(complexes, complexes)
def test_tensor_symmetry_and_validity(a, b):
    C, D = a[0], b[0]
    CD, DC = tensor(C, D), tensor(D, C)
    CD.validate()
    DC.validate()
    assert CD.homology() == DC.homology()
    for n in CD.support:
        assert CD.rank(n) == sum(C.rank(i) * D.rank(n - i) for i in C.support)


def test_hom_examples():
    C, _ = random_complex(random.Random(11))
    H = hom_complex(UNIT, C)
    assert H.ranks == C.ranks and H.differentials == C.differentials
    HD = hom_complex(RES2, UNIT)
    D = dual(RES2)
    assert HD.ranks == D.ranks
    for k in D.differentials:
        assert HD.d(k) in (D.d(k), -D.d(k))
    assert HD.homology() == D.homology()


@pytest.mark.parametrize("n", [2, 3, 6])
def test_hom_reproduces_ext(n):
    P = free_resolution(G(f"Z/{n}")).complex
    H = hom_complex(P, UNIT).homology()
    assert H[0] == ext(G(f"Z/{n}"), G("Z"), 0) == FgAbGroup()
    assert H[-1] == ext(G(f"Z/{n}"), G("Z"), 1) == G(f"Z/{n}")


@settings(max_examples=30, deadline=None)
@given(complexes, complexes)
def test_hom_complex_is_valid_and_cycles_are_chain_maps(a, b):
    from homocalc.maps import chain_map_basis
    C, D = a[0], b[0]
    H = hom_complex(C, D)
    H.validate()
    for f in chain_map_basis(C, D):
        f.validate()


def test_direct_sum_examples():
    assert direct_sum(RES2, ChainComplex()) == RES2
    S = direct_sum(RES2, ChainComplex.two_term([[3]]))
    assert S.homology()[0] == G("Z/6")


@settings(max_examples=40, deadline=None)
@given(complexes, complexes)
def test_direct_sum_homology(a, b):
    (C, HC), (D, HD) = a, b
    S = direct_sum(C, D)
    S.validate()
    assert S.homology() == C.homology() + D.homology()
