"""Finite abstract simplicial complexes and their (co)chain complexes.

Orientation is fixed by a global sorted vertex order: every simplex is
stored as the increasing tuple of its vertices.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Mapping

from .algebra import IntMatrix
from .complexes import ChainComplex, GradedGroup, dual
from .maps import ChainMap, cone


class SimplicialError(ValueError):
    pass


def _order_key(v):
    return (type(v).__name__, v)


class SimplicialComplex:
    """Downward-closed family of nonempty vertex sets, built from any generating simplices."""

    def __init__(self, simplices: Iterable[Iterable[Hashable]] = (),
                 vertices: Iterable[Hashable] = ()):
        closure = set()
        for s in simplices:
            s = frozenset(s)
            if not s:
                continue
            if s in closure:
                continue
            items = list(s)
            for k in range(1, len(items) + 1):
                closure.update(frozenset(c) for c in combinations(items, k))
        closure.update(frozenset([v]) for v in vertices)
        verts = sorted({v for s in closure for v in s}, key=_order_key)
        self.vertices: tuple = tuple(verts)
        self._index = {v: i for i, v in enumerate(verts)}
        by_dim: dict[int, list[tuple]] = {}
        for s in closure:
            t = tuple(sorted(s, key=self._index.__getitem__))
            by_dim.setdefault(len(t) - 1, []).append(t)
        self._simplices = {
            k: sorted(v, key=lambda t: [self._index[x] for x in t]) for k, v in by_dim.items()}
        self._lookup = {k: {s: i for i, s in enumerate(v)} for k, v in self._simplices.items()}

    @property
    def dimension(self) -> int:
        return max(self._simplices, default=-1)

    def simplices(self, k: int) -> list[tuple]:
        """The ``k``-simplices as sorted vertex tuples, in lexicographic order."""
        return list(self._simplices.get(k, []))

    def all_simplices(self) -> list[tuple]:
        return [s for k in sorted(self._simplices) for s in self._simplices[k]]

    def maximal_simplices(self) -> list[tuple]:
        faces = set()
        for s in self.all_simplices():
            for j in range(len(s)):
                faces.add(s[:j] + s[j + 1:])
        return [s for s in self.all_simplices() if s not in faces]

    def count(self, k: int) -> int:
        return len(self._simplices.get(k, ()))

    def __contains__(self, simplex) -> bool:
        s = frozenset(simplex)
        if not s or any(v not in self._index for v in s):
            return False
        t = tuple(sorted(s, key=self._index.__getitem__))
        return t in self._lookup.get(len(t) - 1, {})

    def index(self, simplex: tuple) -> int:
        return self._lookup[len(simplex) - 1][simplex]

    def sort(self, vertices: Iterable[Hashable]) -> tuple:
        return tuple(sorted(vertices, key=self._index.__getitem__))

    def is_empty(self) -> bool:
        return not self.vertices

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(map(frozenset, self.all_simplices())) == set(map(frozenset, other.all_simplices()))

    def __repr__(self) -> str:
        return f"SimplicialComplex({[list(s) for s in self.maximal_simplices()]!r})"

    def boundary_matrix(self, k: int) -> IntMatrix:
        """``d_k``: sum over j of ``(-1)^j`` times the face omitting the j-th vertex."""
        rows, cols = self.count(k - 1), self.count(k)
        data = [[0] * cols for _ in range(rows)]
        if k >= 1:
            lookup = self._lookup[k - 1]
            for c, s in enumerate(self._simplices.get(k, [])):
                for j in range(len(s)):
                    data[lookup[s[:j] + s[j + 1:]]][c] += -1 if j % 2 else 1
        return IntMatrix(data, rows, cols)


def chain_complex(X: SimplicialComplex) -> ChainComplex:
    ranks = {k: X.count(k) for k in range(X.dimension + 1)}
    diffs = {k: X.boundary_matrix(k) for k in range(1, X.dimension + 1)}
    C = ChainComplex(ranks, diffs)
    C.validate()
    return C


def cochain_complex(X: SimplicialComplex) -> ChainComplex:
    """The cochain complex, stored with ``C^i`` in degree ``-i``."""
    return dual(chain_complex(X))


def augmented_chain_complex(X: SimplicialComplex) -> ChainComplex:
    if X.is_empty():
        raise SimplicialError("reduced homology of the empty complex is undefined")
    C = chain_complex(X)
    ranks = C.ranks
    ranks[-1] = 1
    diffs = C.differentials
    diffs[0] = IntMatrix([[1] * X.count(0)])
    return ChainComplex(ranks, diffs)


def homology(X: SimplicialComplex) -> GradedGroup:
    return chain_complex(X).homology()


def cohomology(X: SimplicialComplex) -> GradedGroup:
    """``H^i(X)`` keyed by ``i``."""
    H = cochain_complex(X).homology()
    return GradedGroup({-k: g for k, g in H.items()})


def reduced_homology(X: SimplicialComplex) -> GradedGroup:
    H = augmented_chain_complex(X).homology()
    return GradedGroup({k: g for k, g in H.items() if k >= 0 or not g.is_trivial()})


def _fresh(taken: set, base: str) -> str:
    label = base
    while label in taken:
        label += "'"
    return label


def suspension(X: SimplicialComplex) -> SimplicialComplex:
    """Join with two new cone points that are never joined to each other."""
    taken = set(X.vertices)
    north = _fresh(taken, "N")
    south = _fresh(taken | {north}, "S")
    simplices = [(north,), (south,)]
    for s in X.all_simplices():
        simplices.append(s + (north,))
        simplices.append(s + (south,))
    return SimplicialComplex(simplices)


class SimplicialMap:
    """Vertex map sending every simplex of ``source`` onto a simplex of ``target``."""

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex,
                 vertex_map: Mapping[Hashable, Hashable]):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)
        missing = [v for v in source.vertices if v not in self.vertex_map]
        if missing:
            raise SimplicialError(f"vertex map is undefined on {missing}")
        for s in source.all_simplices():
            image = {self.vertex_map[v] for v in s}
            if image not in target:
                raise SimplicialError(
                    f"image {sorted(image, key=_order_key)} of simplex {list(s)} "
                    f"is not a simplex of the target")

    def __call__(self, v):
        return self.vertex_map[v]

    def compose(self, other: SimplicialMap) -> SimplicialMap:
        """``self o other``."""
        return SimplicialMap(other.source, self.target,
                             {v: self.vertex_map[other.vertex_map[v]] for v in other.source.vertices})


def _sort_sign(seq: list[int]) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign


def chain_map_of(f: SimplicialMap) -> ChainMap:
    """Induced chain map: ``+-`` the image simplex, or zero if the image is degenerate."""
    X, Y = f.source, f.target
    comps = {}
    for k in range(X.dimension + 1):
        data = [[0] * X.count(k) for _ in range(Y.count(k))]
        for c, s in enumerate(X.simplices(k)):
            image = [f(v) for v in s]
            if len(set(image)) < len(image):
                continue
            t = Y.sort(image)
            data[Y.index(t)][c] = _sort_sign([Y._index[v] for v in image])
        comps[k] = IntMatrix(data, Y.count(k), X.count(k))
    g = ChainMap(chain_complex(X), chain_complex(Y), comps)
    g.validate()
    return g


def mapping_cone_complex(f: SimplicialMap) -> ChainComplex:
    return cone(chain_map_of(f))


def components(X: SimplicialComplex) -> int:
    """Number of connected components, by union-find on the 1-skeleton."""
    parent = {v: v for v in X.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in X.simplices(1):
        parent[find(a)] = find(b)
    return len({find(v) for v in X.vertices})


# small named complexes used by tests and the CLI corpus


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the ``n``-simplex on vertices ``0..n``: a triangulated ``S^{n-1}``."""
    verts = list(range(n + 1))
    return SimplicialComplex(combinations(verts, n))


def projective_plane() -> SimplicialComplex:
    """The 6-vertex, 10-triangle triangulation of the real projective plane."""
    return SimplicialComplex([
        (1, 2, 4), (2, 3, 4), (1, 3, 5), (1, 4, 5), (3, 4, 6),
        (4, 5, 6), (1, 2, 6), (1, 3, 6), (2, 3, 5), (2, 5, 6),
    ])
