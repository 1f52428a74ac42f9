"""Free resolutions, Tor, Ext and Koszul complexes over Z."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .algebra import FgAbGroup, IntMatrix, cokernel
from .complexes import ChainComplex, hom_complex, tensor


@dataclass(frozen=True)
class ResolutionResult:
    complex: ChainComplex
    augmentation_target: FgAbGroup


def free_resolution(A: FgAbGroup) -> ResolutionResult:
    """Two-term free resolution ``Z^k --R--> Z^n`` read off the invariant factors.

    ``R`` is the relation matrix of ``A``: one column per torsion factor,
    so it is injective and its cokernel is ``A``.
    """
    R = A.relation_matrix()
    if R.cols == 0:
        C = ChainComplex({0: A.ngens})
    else:
        C = ChainComplex({1: R.cols, 0: R.rows}, {1: R})
    return ResolutionResult(C, A)


def is_resolution_of(C: ChainComplex, A: FgAbGroup) -> bool:
    """``H_0(C) = A`` and every other homology group vanishes."""
    C.validate()
    H = C.homology()
    return H[0] == A and all(g.is_trivial() for k, g in H.items() if k != 0)


def derived_tensor(A: FgAbGroup, B: FgAbGroup) -> ChainComplex:
    """Tensor product of the free resolutions; its homology is ``Tor_*(A, B)``."""
    return tensor(free_resolution(A).complex, free_resolution(B).complex)


def tor(A: FgAbGroup, B: FgAbGroup, i: int) -> FgAbGroup:
    if i < 0:
        raise ValueError("Tor is only defined in nonnegative degrees")
    return derived_tensor(A, B).homology_at(i)


def derived_hom(A: FgAbGroup, B: FgAbGroup) -> ChainComplex:
    """``Hom(P_A, P_B)``; ``Ext^i(A, B)`` sits in degree ``-i``.

    ``P_A`` is a bounded complex of free modules, so ``Hom(P_A, -)`` carries
    the quasi-isomorphism ``P_B -> B`` to one; this keeps the complex free
    even when ``B`` has torsion.
    """
    return hom_complex(free_resolution(A).complex, free_resolution(B).complex)


def ext(A: FgAbGroup, B: FgAbGroup, i: int) -> FgAbGroup:
    if i < 0:
        raise ValueError("Ext is only defined in nonnegative degrees")
    return derived_hom(A, B).homology_at(-i)


def tensor_group(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """``A (x) B`` straight from presentations, without any complex.

    With ``A = coker(R)`` and ``B = coker(S)``, ``A (x) B`` is the cokernel
    of ``[R (x) 1 | 1 (x) S]``.
    """
    R, S = A.relation_matrix(), B.relation_matrix()
    left = R.kron(IntMatrix.identity(B.ngens))
    right = IntMatrix.identity(A.ngens).kron(S)
    return cokernel(IntMatrix.hstack(left, right, rows=A.ngens * B.ngens))


def koszul(s: Sequence[int]) -> ChainComplex:
    """Koszul complex of ``s = (s_1, ..., s_r)``: ``Lambda^k Z^r`` in degree ``k``.

    Basis of degree ``k``: ``k``-subsets of ``{0..r-1}`` in lexicographic
    order.  The differential contracts with ``s``: deleting the entry in
    position ``p`` of ``e_J`` contributes ``(-1)^p s_{J_p} e_{J - J_p}``.
    """
    s = [int(x) for x in s]
    r = len(s)
    if r < 1:
        raise ValueError("koszul needs at least one element")
    bases = {k: list(combinations(range(r), k)) for k in range(r + 1)}
    index = {k: {J: n for n, J in enumerate(b)} for k, b in bases.items()}
    ranks = {k: len(b) for k, b in bases.items()}
    diffs = {}
    for k in range(1, r + 1):
        data = [[0] * ranks[k] for _ in range(ranks[k - 1])]
        for c, J in enumerate(bases[k]):
            for p, j in enumerate(J):
                face = J[:p] + J[p + 1:]
                data[index[k - 1][face]][c] += (-1) ** p * s[j]
        diffs[k] = IntMatrix(data, ranks[k - 1], ranks[k])
    return ChainComplex(ranks, diffs)
