import pytest

from homocalc import ChainMap, FgAbGroup, IntMatrix, dual, induced_on_homology
from homocalc.simplicial import (
    SimplicialComplex,
    SimplicialError,
    SimplicialMap,
    augmented_chain_complex,
    chain_complex,
    chain_map_of,
    cochain_complex,
    cohomology,
    components,
    homology,
    mapping_cone_complex,
    projective_plane,
    reduced_homology,
    simplex_boundary,
    suspension,
)

from oracles import complex_homology_oracle

G = FgAbGroup.parse

POINT = SimplicialComplex([["p"]])
TWO_POINTS = SimplicialComplex([["a"], ["b"]])
CIRCLE = simplex_boundary(2)
SPHERE = simplex_boundary(3)
RP2 = projective_plane()
TORUS = SimplicialComplex([
    (1, 2, 4), (2, 4, 5), (2, 3, 5), (3, 5, 6), (1, 3, 6), (1, 4, 6),
    (4, 5, 7), (5, 7, 8), (5, 6, 8), (6, 8, 9), (4, 6, 9), (4, 7, 9),
    (1, 7, 2), (2, 7, 8), (2, 8, 3), (3, 8, 9), (3, 9, 1), (1, 9, 7),
])
WEDGE = SimplicialComplex([("a", "b"), ("b", "c"), ("a", "c"), ("a", "d"), ("d", "e"), ("a", "e")])
CORPUS = [POINT, TWO_POINTS, CIRCLE, SPHERE, RP2, TORUS, WEDGE, simplex_boundary(4),
          SimplicialComplex([(0, 1, 2)]), SimplicialComplex([("x", "y"), ("z",)])]


def groups(H, top):
    return [str(H[i]) for i in range(top + 1)]


def test_chain_complex_examples():
    assert chain_complex(POINT).ranks == {0: 1}
    assert groups(homology(CIRCLE), 1) == ["Z", "Z"]
    assert groups(homology(RP2), 2) == ["Z", "Z/2", "0"]
    assert groups(complex_homology_oracle(chain_complex(RP2)), 2) == ["Z", "Z/2", "0"]
    assert groups(homology(TORUS), 2) == ["Z", "Z^2", "Z"]


def test_boundary_orientation():
    d = chain_complex(SimplicialComplex([(0, 1, 2)])).d(2)
    # faces in order (0,1), (0,2), (1,2): d[012] = [12] - [02] + [01]
    assert d == IntMatrix([[1], [-1], [1]])


@pytest.mark.parametrize("X", CORPUS)
def test_boundary_squares_to_zero_and_matches_oracle(X):
    C = chain_complex(X)
    C.validate()
    assert C.homology() == complex_homology_oracle(C)


def test_cochain_examples():
    assert cochain_complex(POINT).ranks == {0: 1}
    H = cohomology(RP2)
    assert [str(H[i]) for i in range(3)] == ["Z", "0", "Z/2"]
    H = cohomology(CIRCLE)
    assert [str(H[i]) for i in range(2)] == ["Z", "Z"]


@pytest.mark.parametrize("X", CORPUS)
def test_cochain_is_dual(X):
    assert cochain_complex(X) == dual(chain_complex(X))


def test_chain_map_examples():
    ident = SimplicialMap(CIRCLE, CIRCLE, {v: v for v in CIRCLE.vertices})
    assert chain_map_of(ident) == ChainMap.identity(chain_complex(CIRCLE))
    edge = SimplicialComplex([("a", "b")])
    collapse = chain_map_of(SimplicialMap(edge, POINT, {"a": "p", "b": "p"}))
    assert collapse[1].is_zero() and collapse[0] == IntMatrix([[1, 1]])
    rot = chain_map_of(SimplicialMap(CIRCLE, CIRCLE, {0: 1, 1: 2, 2: 0}))
    assert induced_on_homology(rot)[1].matrix == IntMatrix([[1]])
    flip = chain_map_of(SimplicialMap(CIRCLE, CIRCLE, {0: 1, 1: 0, 2: 2}))
    assert induced_on_homology(flip)[1].matrix == IntMatrix([[-1]])


def test_functoriality():
    f = SimplicialMap(SPHERE, SPHERE, {0: 1, 1: 2, 2: 3, 3: 0})
    g = SimplicialMap(SPHERE, SPHERE, {0: 0, 1: 1, 2: 2, 3: 2})
    h = SimplicialMap(SPHERE, CIRCLE, {0: 0, 1: 1, 2: 1, 3: 0})
    for a, b in [(f, g), (g, f), (h, f), (h, g)]:
        assert chain_map_of(a.compose(b)) == chain_map_of(a) @ chain_map_of(b)


def test_suspension_examples():
    S = suspension(TWO_POINTS)
    assert groups(homology(S), 1) == ["Z", "Z"]
    assert reduced_homology(suspension(POINT)).is_zero()
    assert groups(homology(suspension(CIRCLE)), 2) == ["Z", "0", "Z"]


def test_suspension_vertices_are_fresh():
    X = SimplicialComplex([("N", "S")])
    S = suspension(X)
    assert len(S.vertices) == 4
    assert S.dimension == 2


@pytest.mark.parametrize("X", CORPUS)
def test_suspension_isomorphism(X):
    assert reduced_homology(suspension(X)) == reduced_homology(X).shifted(1)


def test_reduced_homology_examples():
    assert reduced_homology(POINT).is_zero()
    assert reduced_homology(TWO_POINTS)[0] == G("Z")
    H = reduced_homology(CIRCLE)
    assert H[0].is_trivial() and H[1] == G("Z")
    assert augmented_chain_complex(CIRCLE).rank(-1) == 1
    with pytest.raises(SimplicialError):
        reduced_homology(SimplicialComplex())


@pytest.mark.parametrize("X", CORPUS)
def test_h0_counts_components(X):
    assert homology(X)[0].rank == components(X)
    assert not homology(X)[0].torsion


def test_mapping_cone_examples():
    ident = SimplicialMap(CIRCLE, CIRCLE, {v: v for v in CIRCLE.vertices})
    assert mapping_cone_complex(ident).homology().is_zero()
    collapse = SimplicialMap(CIRCLE, POINT, {v: "p" for v in CIRCLE.vertices})
    H = mapping_cone_complex(collapse).homology()
    assert H == reduced_homology(suspension(CIRCLE))
    assert H[2] == G("Z")
    edge = SimplicialComplex([(0, 1)])
    inc = SimplicialMap(edge, CIRCLE, {0: 0, 1: 1})
    C = mapping_cone_complex(inc)
    assert C.homology()[1] == G("Z") and C.homology() == complex_homology_oracle(C)


def test_invalid_inputs():
    with pytest.raises(SimplicialError):
        SimplicialMap(CIRCLE, SimplicialComplex([("a", "b")]), {0: "a", 1: "b", 2: "c"})
    with pytest.raises(SimplicialError):
        SimplicialMap(CIRCLE, CIRCLE, {0: 0, 1: 1})
    # a filled triangle cannot land on a hollow one
    with pytest.raises(SimplicialError):
        SimplicialMap(SimplicialComplex([(0, 1, 2)]), CIRCLE, {0: 0, 1: 1, 2: 2})


def test_closure_and_mixed_labels():
    X = SimplicialComplex([(3, 1, 2)])
    assert X.count(0) == 3 and X.count(1) == 3 and X.count(2) == 1
    assert (1, 2) in X and (2, 1) in X
    Y = SimplicialComplex([(1, "a")])
    assert chain_complex(Y).homology()[0] == G("Z")
