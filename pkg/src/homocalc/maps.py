"""Chain maps, homotopies, cones, cylinders, exact triangles and long exact sequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import (
    FgAbGroup,
    GroupHom,
    IntMatrix,
    InducedMap,
    induced_subquotient_map,
    kernel_basis,
    kernel_lift,
    lattice_contains,
    solve,
)
from .complexes import ChainComplex, ComplexError, hom_complex, shift


class ChainMapError(ValueError):
    def __init__(self, degree: int, message: str):
        super().__init__(f"degree {degree}: {message}")
        self.degree = degree


class ExactnessError(RuntimeError):
    """An invariant that must hold by construction was found broken."""


class ChainMap:
    """Degreewise matrices ``f_i : source_i -> target_i``; missing degrees are zero."""

    __slots__ = ("source", "target", "_components")

    def __init__(self, source: ChainComplex, target: ChainComplex,
                 components: Mapping[int, object] | None = None):
        self.source = source
        self.target = target
        comps = {}
        for k, m in (components or {}).items():
            k = int(k)
            if not isinstance(m, IntMatrix):
                rows, cols = target.rank(k), source.rank(k)
                m = [list(r) for r in m]
                m = IntMatrix(m, rows, cols) if not m or not m[0] else IntMatrix(m)
            if m.rows == 0 or m.cols == 0:
                if m.shape == (target.rank(k), source.rank(k)):
                    continue
            comps[k] = m
        self._components = dict(sorted(comps.items()))

    @classmethod
    def identity(cls, C: ChainComplex) -> ChainMap:
        return cls(C, C, {k: IntMatrix.identity(r) for k, r in C.ranks.items()})

    @classmethod
    def zero(cls, source: ChainComplex, target: ChainComplex) -> ChainMap:
        return cls(source, target, {})

    @property
    def components(self) -> dict[int, IntMatrix]:
        return dict(self._components)

    def __getitem__(self, i: int) -> IntMatrix:
        m = self._components.get(i)
        if m is None:
            return IntMatrix.zeros(self.target.rank(i), self.source.rank(i))
        return m

    def degrees(self) -> range:
        sup = [r for r in (self.source.support, self.target.support) if r]
        if not sup:
            return range(0)
        lo = min(r.start for r in sup)
        hi = max(r.stop for r in sup)
        return range(lo, hi)

    def validate(self) -> None:
        """Raise :class:`ChainMapError` at the first degree where ``d f != f d``."""
        self.source.validate()
        self.target.validate()
        for k, m in self._components.items():
            if m.shape != (self.target.rank(k), self.source.rank(k)):
                raise ChainMapError(
                    k, f"component has shape {m.shape}, expected "
                       f"{(self.target.rank(k), self.source.rank(k))}")
        for k in self.degrees():
            if not (self.target.d(k) @ self[k] == self[k - 1] @ self.source.d(k)):
                raise ChainMapError(k, "map does not commute with the differentials")
        # d_{lo} lands in degree lo-1 where both sides vanish; nothing more to check

    def is_valid(self) -> bool:
        try:
            self.validate()
        except (ChainMapError, ComplexError):
            return False
        return True

    def _check_parallel(self, other: ChainMap):
        if self.source != other.source or self.target != other.target:
            raise ValueError("chain maps must have the same source and target")

    def __add__(self, other: ChainMap) -> ChainMap:
        self._check_parallel(other)
        return ChainMap(self.source, self.target,
                        {k: self[k] + other[k] for k in self.degrees()})

    def __sub__(self, other: ChainMap) -> ChainMap:
        self._check_parallel(other)
        return ChainMap(self.source, self.target,
                        {k: self[k] - other[k] for k in self.degrees()})

    def __neg__(self) -> ChainMap:
        return ChainMap(self.source, self.target, {k: -m for k, m in self._components.items()})

    def __matmul__(self, other: ChainMap) -> ChainMap:
        """Composition ``self o other``."""
        if other.target != self.source:
            raise ValueError("chain maps are not composable")
        return ChainMap(other.source, self.target,
                        {k: self[k] @ other[k] for k in other.source.support})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        return all(self[k] == other[k] for k in self.degrees())

    def __repr__(self) -> str:
        comps = {k: m.tolist() for k, m in self._components.items()}
        return f"ChainMap(source={self.source!r}, target={self.target!r}, components={comps})"


def validate_map(f: ChainMap) -> None:
    f.validate()


def chain_map_basis(A: ChainComplex, B: ChainComplex) -> list[ChainMap]:
    """A Z-basis of all chain maps ``A -> B``: the degree-0 cycles of ``Hom(A, B)``."""
    H = hom_complex(A, B)
    if H.rank(0) == 0:
        return []
    K = kernel_basis(H.d(0))
    parts = [i for i in A.support if A.rank(i) and B.rank(i)]
    out = []
    for vec in K.columns():
        comps, pos = {}, 0
        for i in parts:
            r, c = B.rank(i), A.rank(i)
            comps[i] = IntMatrix([vec[pos + k * c:pos + (k + 1) * c] for k in range(r)], r, c)
            pos += r * c
        out.append(ChainMap(A, B, comps))
    return out


@dataclass(frozen=True)
class Homotopy:
    """Maps ``s_i : source_i -> target_{i+1}`` with ``f - g = d s + s d``."""

    source: ChainComplex
    target: ChainComplex
    components: dict = field(default_factory=dict)

    def __getitem__(self, i: int) -> IntMatrix:
        m = self.components.get(i)
        if m is None:
            return IntMatrix.zeros(self.target.rank(i + 1), self.source.rank(i))
        return m

    def boundary(self) -> ChainMap:
        """The null-homotopic map ``d s + s d``."""
        A, B = self.source, self.target
        return ChainMap(A, B, {
            i: B.d(i + 1) @ self[i] + self[i - 1] @ A.d(i) for i in A.support})

    def witnesses(self, f: ChainMap, g: ChainMap) -> bool:
        return (f - g) == self.boundary()


# cones and cylinders


def cone(f: ChainMap) -> ChainComplex:
    """Mapping cone ``A[1] + B`` with ``d = [[-d_A, 0], [f, d_B]]``.

    Degree ``n`` is ``A_{n-1}`` followed by ``B_n``.
    """
    f.validate()
    A, B = f.source, f.target
    degs = set(B.ranks) | {k + 1 for k in A.ranks}
    ranks = {n: A.rank(n - 1) + B.rank(n) for n in degs}
    diffs = {}
    for n in degs:
        if ranks.get(n - 1, 0) == 0:
            continue
        diffs[n] = IntMatrix.block([
            [-A.d(n - 1), IntMatrix.zeros(A.rank(n - 2), B.rank(n))],
            [f[n - 1], B.d(n)],
        ])
    return ChainComplex(ranks, diffs)


@dataclass(frozen=True)
class Cylinder:
    complex: ChainComplex
    iota1: ChainMap
    iota2: ChainMap
    p: ChainMap

    def __iter__(self):
        return iter((self.complex, self.iota1, self.iota2, self.p))


def cylinder(A: ChainComplex) -> Cylinder:
    """``cyl(A) = A + A[1] + A`` with the two end inclusions and the collapse ``p``.

    Degree ``n`` is ``A_n + A_{n-1} + A_n`` and

        d = [[d, -1,  0],
             [0, -d,  0],
             [0,  1,  d]]

    which is the transpose of the cochain-level matrix
    ``[[d, 0, 0], [-1, d[1], 1], [0, 0, d]]``; ``dual(cylinder(A).complex)``
    has exactly that shape.  ``p(x, y, z) = x + z`` so ``p o iota_k = id``.
    """
    A.validate()
    degs = set(A.ranks) | {k + 1 for k in A.ranks}
    ranks = {n: 2 * A.rank(n) + A.rank(n - 1) for n in degs}

    def Z(r, c):
        return IntMatrix.zeros(r, c)

    def I(r):
        return IntMatrix.identity(r)

    diffs = {}
    for n in degs:
        a, b, c = A.rank(n - 1), A.rank(n - 2), A.rank(n)  # target blocks a,b,a ; source c,a,c
        diffs[n] = IntMatrix.block([
            [A.d(n), -I(a), Z(a, c)],
            [Z(b, c), -A.d(n - 1), Z(b, c)],
            [Z(a, c), I(a), A.d(n)],
        ])
    cyl = ChainComplex(ranks, diffs)
    iota1, iota2, proj = {}, {}, {}
    for n in degs:
        c, a = A.rank(n), A.rank(n - 1)
        iota1[n] = IntMatrix.vstack(I(c), Z(a, c), Z(c, c), cols=c)
        iota2[n] = IntMatrix.vstack(Z(c, c), Z(a, c), I(c), cols=c)
        proj[n] = IntMatrix.hstack(I(c), Z(c, a), I(c), rows=c)
    return Cylinder(cyl, ChainMap(A, cyl, iota1), ChainMap(A, cyl, iota2), ChainMap(cyl, A, proj))


# homology of maps


@dataclass(frozen=True)
class GradedHom:
    """Per-degree induced maps ``H_i(source) -> H_i(target)``."""

    maps: dict

    def __getitem__(self, i: int) -> GroupHom:
        return self.maps[i].hom

    def degrees(self):
        return list(self.maps)

    def is_isomorphism(self) -> bool:
        return all(m.is_isomorphism for m in self.maps.values())

    def matrices(self) -> dict[int, IntMatrix]:
        return {k: m.hom.matrix for k, m in self.maps.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedHom):
            return NotImplemented
        return {k: m.hom for k, m in self.maps.items()} == \
            {k: m.hom for k, m in other.maps.items()}


def induced_on_homology(f: ChainMap) -> GradedHom:
    f.validate()
    out = {}
    for k in f.degrees():
        out[k] = induced_subquotient_map(f[k], f.source.subquotient(k), f.target.subquotient(k))
    return GradedHom(out)


@dataclass(frozen=True)
class QuasiIsoReport:
    is_quasi_iso: bool
    per_degree: dict
    cone_homology: object

    def __bool__(self) -> bool:
        return self.is_quasi_iso


def is_quasi_iso(f: ChainMap) -> QuasiIsoReport:
    """Decide whether ``f`` is a quasi-isomorphism, two ways.

    The induced maps on homology must all be isomorphisms, and the cone
    must be acyclic; the two answers are required to agree.
    """
    induced = induced_on_homology(f)
    per_degree = {k: m.is_isomorphism for k, m in induced.maps.items()}
    by_induced = all(per_degree.values())
    H = cone(f).homology()
    by_cone = H.is_zero()
    if by_induced != by_cone:
        raise ExactnessError(
            f"quasi-isomorphism criteria disagree: induced maps say {by_induced}, "
            f"cone homology {H} says {by_cone}")
    return QuasiIsoReport(by_induced, per_degree, H)


def find_homotopy(f: ChainMap, g: ChainMap) -> Homotopy | None:
    """Integer ``s`` with ``f - g = d s + s d``, or ``None`` when none exists over Z.

    All components of ``s`` are stacked into one unknown vector (each
    ``s_i`` flattened row-major) and the degreewise equations into one
    linear system.
    """
    f.validate()
    g.validate()
    f._check_parallel(g)
    A, B = f.source, f.target
    h = f - g
    # unknown s_i : A_i -> B_{i+1}
    unknowns = [i for i in A.support if A.rank(i) and B.rank(i + 1)]
    offsets, n_unknowns = {}, 0
    for i in unknowns:
        offsets[i] = n_unknowns
        n_unknowns += B.rank(i + 1) * A.rank(i)
    eqs = [i for i in A.support if A.rank(i) and B.rank(i)]
    row_blocks = []
    rhs = []
    for i in eqs:
        nrows = B.rank(i) * A.rank(i)
        blocks = []
        for j in unknowns:
            ncols = B.rank(j + 1) * A.rank(j)
            blk = IntMatrix.zeros(nrows, ncols)
            if j == i:
                # d_B o s_i
                blk = blk + B.d(i + 1).kron(IntMatrix.identity(A.rank(i)))
            if j == i - 1:
                # s_{i-1} o d_A
                blk = blk + IntMatrix.identity(B.rank(i)).kron(A.d(i).T)
            blocks.append(blk)
        row_blocks.append(IntMatrix.hstack(*blocks, rows=nrows))
        rhs.extend(h[i].entries)
    if not row_blocks:
        s = Homotopy(A, B, {})
        return s if s.witnesses(f, g) else None
    system = IntMatrix.vstack(*row_blocks, cols=n_unknowns)
    x = solve(system, rhs)
    if x is None:
        return None
    comps = {}
    for i in unknowns:
        r, c = B.rank(i + 1), A.rank(i)
        flat = x[offsets[i]:offsets[i] + r * c]
        comps[i] = IntMatrix([flat[k * c:(k + 1) * c] for k in range(r)], r, c)
    s = Homotopy(A, B, comps)
    if not s.witnesses(f, g):
        raise ExactnessError("solved homotopy does not satisfy f - g = ds + sd")
    return s


# triangles and long exact sequences


@dataclass(frozen=True)
class Triangle:
    """``A --f--> B --i--> C --p--> A[1]`` with ``C = cone(f)``."""

    A: ChainComplex
    B: ChainComplex
    C: ChainComplex
    f: ChainMap
    i: ChainMap
    p: ChainMap


def triangle_of(f: ChainMap) -> Triangle:
    f.validate()
    A, B = f.source, f.target
    C = cone(f)
    inc, proj = {}, {}
    for n in C.support:
        a, b = A.rank(n - 1), B.rank(n)
        inc[n] = IntMatrix.vstack(IntMatrix.zeros(a, b), IntMatrix.identity(b), cols=b)
        proj[n] = IntMatrix.hstack(IntMatrix.identity(a), IntMatrix.zeros(a, b), rows=a)
    i = ChainMap(B, C, inc)
    p = ChainMap(C, shift(A, 1), proj)
    i.validate()
    p.validate()
    return Triangle(A, B, C, f, i, p)


@dataclass(frozen=True)
class LongExactSequence:
    """Groups ``G_0 -> G_1 -> ... -> G_m`` with ``maps[k] : G_k -> G_{k+1}``.

    Positions ``1 .. m-1`` are the interior nodes where exactness is checked.
    """

    groups: list
    maps: list
    labels: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.groups)

    def __str__(self) -> str:
        labels = self.labels or [str(k) for k in range(len(self.groups))]
        return " -> ".join(str(g) if lab in ("", "0") else f"{lab} = {g}"
                           for lab, g in zip(labels, self.groups))


def check_exactness(seq: LongExactSequence) -> int | None:
    """Index of the first interior node where image != kernel, or ``None`` if exact."""
    groups, maps = seq.groups, seq.maps
    if len(maps) != len(groups) - 1:
        raise ValueError("a sequence of n groups needs n - 1 maps")
    for k, m in enumerate(maps):
        if m.source != groups[k] or m.target != groups[k + 1]:
            raise ValueError(f"map {k} does not go from group {k} to group {k + 1}")
    for k in range(1, len(groups) - 1):
        incoming, outgoing = maps[k - 1], maps[k]
        image = incoming.image_lattice()
        kernel = kernel_lift(outgoing.matrix, outgoing.target)
        if not (lattice_contains(kernel, image) and lattice_contains(image, kernel)):
            return k
    return None


def les_of_triangle(T: Triangle) -> LongExactSequence:
    """``... H_n(A) -> H_n(B) -> H_n(C) -> H_{n-1}(A) -> ...`` with zero ends.

    The connecting map is induced by the cone projection ``p``; it is
    evaluated against the generators of ``H_{n-1}(A)`` directly (the shifted
    complex has the same cycles and boundaries).
    """
    A, B, C = T.A, T.B, T.C
    sup = [r for r in (A.support, B.support, C.support) if r]
    if not sup:
        z = FgAbGroup()
        return LongExactSequence([z, z], [GroupHom.zero(z, z)], ["0", "0"])
    hi = max(r.stop for r in sup) - 1
    lo = min(r.start for r in sup)

    groups: list[FgAbGroup] = [FgAbGroup()]
    labels = ["0"]
    maps: list[GroupHom] = []

    def push(hom: GroupHom, label: str):
        maps.append(hom)
        groups.append(hom.target)
        labels.append(label)

    first = A.subquotient(hi).group
    push(GroupHom.zero(FgAbGroup(), first), f"H_{hi}(A)")
    for n in range(hi, lo - 1, -1):
        fn: InducedMap = induced_subquotient_map(T.f[n], A.subquotient(n), B.subquotient(n))
        push(fn.hom, f"H_{n}(B)")
        in_ = induced_subquotient_map(T.i[n], B.subquotient(n), C.subquotient(n))
        push(in_.hom, f"H_{n}(C)")
        pn = induced_subquotient_map(T.p[n], C.subquotient(n), A.subquotient(n - 1))
        push(pn.hom, f"H_{n - 1}(A)")
    push(GroupHom.zero(groups[-1], FgAbGroup()), "0")
    seq = LongExactSequence(groups, maps, labels)
    bad = check_exactness(seq)
    if bad is not None:
        raise ExactnessError(f"long exact sequence is not exact at {labels[bad]}")
    return seq


def exact_sequence(groups: Sequence[FgAbGroup], matrices: Sequence[IntMatrix | list]) -> LongExactSequence:
    """Build a sequence from groups and plain matrices (on canonical generators)."""
    maps = []
    for k, m in enumerate(matrices):
        src, tgt = groups[k], groups[k + 1]
        if not isinstance(m, IntMatrix):
            m = IntMatrix(m, tgt.ngens, src.ngens) if not m or not m[0] else IntMatrix(m)
        maps.append(GroupHom(src, tgt, m))
    return LongExactSequence(list(groups), maps)
