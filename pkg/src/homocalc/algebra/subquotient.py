"""Homology groups ker/im with explicit generators, and homomorphisms between them.

Every group computed here carries *canonical generators*: a deterministic
list of cycle representatives, free generators first and then torsion
generators in divisibility order.  Homomorphisms are integer matrices on
those generators, with rows of a torsion generator of order ``t`` reduced
into ``[0, t)``.  Since the generators depend only on the pair of
differentials, two maps between the same pair of complexes can be compared
by matrix equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groups import FgAbGroup, cokernel
from .matrix import IntMatrix
from .snf import kernel_basis, smith_normal_form, solve, solve_matrix


class SubquotientError(ValueError):
    pass


class Subquotient:
    """``ker(d_out) / im(d_in)`` where ``d_out @ d_in == 0``."""

    def __init__(self, d_out: IntMatrix, d_in: IntMatrix):
        if d_out.cols != d_in.rows:
            raise SubquotientError(
                f"incompatible shapes: d_out is {d_out.shape}, d_in is {d_in.shape}")
        if not (d_out @ d_in).is_zero():
            raise SubquotientError("d_out @ d_in is not zero")
        self.d_out = d_out
        self.d_in = d_in
        self.ambient = d_out.cols

        self._K = kernel_basis(d_out)
        self._K_snf = smith_normal_form(self._K)
        # boundaries in cycle coordinates; unique since K has full column rank
        X = solve_matrix(self._K, d_in, self._K_snf)
        assert X is not None, "boundaries must be cycles"
        snf = smith_normal_form(X)
        k = self._K.cols
        d = snf.invariants
        free = list(range(len(d), k))
        tors = [i for i, x in enumerate(d) if x != 1]
        self._U = snf.U
        self._keep = free + tors
        self._mods = [0] * len(free) + [d[i] for i in tors]
        self.group = FgAbGroup(len(free), tuple(d[i] for i in tors))

        gens = self._K @ snf.U_inv
        self.generators = IntMatrix.from_columns(
            [gens.col(i) for i in self._keep], self.ambient)

    def is_cycle(self, z: Sequence[int]) -> bool:
        return not any(self.d_out.apply(z))

    def coordinates(self, z: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of the class of the cycle ``z`` on the canonical generators."""
        x = solve(self._K, z, self._K_snf)
        if x is None:
            raise SubquotientError("vector is not a cycle")
        y = self._U.apply(x)
        return tuple(y[i] % m if m else y[i] for i, m in zip(self._keep, self._mods))

    def is_boundary(self, z: Sequence[int]) -> bool:
        return solve(self.d_in, z) is not None


def homology_at(d_out: IntMatrix, d_in: IntMatrix) -> FgAbGroup:
    """``ker(d_out) / im(d_in)`` in canonical form."""
    if d_out.cols != d_in.rows:
        raise SubquotientError(
            f"incompatible shapes: d_out is {d_out.shape}, d_in is {d_in.shape}")
    if not (d_out @ d_in).is_zero():
        raise SubquotientError("d_out @ d_in is not zero")
    K = kernel_basis(d_out)
    X = solve_matrix(K, d_in)
    return cokernel(X)


def reduce_rows(M: IntMatrix, target: FgAbGroup) -> IntMatrix:
    """Reduce each row belonging to a torsion generator modulo its order."""
    mods = target.orders
    return IntMatrix([[x % m if m else x for x in M.row(i)] for i, m in enumerate(mods)],
                     M.rows, M.cols)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism between canonical groups, as a matrix on canonical generators."""

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.ngens, self.source.ngens):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match "
                f"{self.target} <- {self.source}")
        object.__setattr__(self, "matrix", reduce_rows(self.matrix, self.target))

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> GroupHom:
        return cls(source, target, IntMatrix.zeros(target.ngens, source.ngens))

    @classmethod
    def identity(cls, group: FgAbGroup) -> GroupHom:
        return cls(group, group, IntMatrix.identity(group.ngens))

    def is_surjective(self) -> bool:
        return cokernel(IntMatrix.hstack(self.matrix, self.target.relation_matrix(),
                                         rows=self.target.ngens)).is_trivial()

    def is_isomorphism(self) -> bool:
        # fg abelian groups are Hopfian: a surjection onto an isomorphic group is bijective
        return self.source == self.target and self.is_surjective()

    def kernel_lattice(self) -> IntMatrix:
        """Basis of the preimage in ``Z^ngens(source)`` of the kernel."""
        return kernel_lift(self.matrix, self.target)

    def image_lattice(self) -> IntMatrix:
        """Generators of the image lifted to ``Z^ngens(target)``, relations included."""
        return IntMatrix.hstack(self.matrix, self.target.relation_matrix(),
                                rows=self.target.ngens)

    def __matmul__(self, other: GroupHom) -> GroupHom:
        if other.target != self.source:
            raise ValueError("homomorphisms are not composable")
        return GroupHom(other.source, self.target, self.matrix @ other.matrix)


def kernel_lift(M: IntMatrix, target: FgAbGroup) -> IntMatrix:
    """Basis of ``{x : M x lies in the relation lattice of target}``."""
    R = target.relation_matrix()
    big = IntMatrix.hstack(M, R, rows=target.ngens)
    K = kernel_basis(big)
    return K.submatrix(range(M.cols), range(K.cols))


def lattice_contains(L: IntMatrix, vectors: IntMatrix) -> bool:
    """Whether every column of ``vectors`` lies in the column span of ``L``."""
    return solve_matrix(L, vectors) is not None


@dataclass(frozen=True)
class InducedMap:
    hom: GroupHom
    is_isomorphism: bool
    source: Subquotient
    target: Subquotient


def induced_subquotient_map(f: IntMatrix, source: Subquotient | tuple[IntMatrix, IntMatrix],
                            target: Subquotient | tuple[IntMatrix, IntMatrix]) -> InducedMap:
    """Map on homology induced by ``f`` from ``source = (d_out, d_in)`` to ``target``.

    Raises :class:`SubquotientError` unless ``f`` sends cycles to cycles and
    boundaries to boundaries.
    """
    if not isinstance(source, Subquotient):
        source = Subquotient(*source)
    if not isinstance(target, Subquotient):
        target = Subquotient(*target)
    if f.shape != (target.ambient, source.ambient):
        raise SubquotientError(
            f"map has shape {f.shape}, expected {(target.ambient, source.ambient)}")
    if not (target.d_out @ f @ source._K).is_zero():
        raise SubquotientError("map does not send cycles to cycles")
    if solve_matrix(target.d_in, f @ source.d_in) is None:
        raise SubquotientError("map does not send boundaries to boundaries")
    images = f @ source.generators
    cols = [target.coordinates(images.col(j)) for j in range(images.cols)]
    M = IntMatrix.from_columns(cols, target.group.ngens)
    hom = GroupHom(source.group, target.group, M)
    return InducedMap(hom, hom.is_isomorphism(), source, target)
