"""Exact integer linear algebra: Smith normal form, kernels, cokernels, homology."""

from .groups import FgAbGroup, cokernel
from .matrix import IntMatrix
from .snf import SnfResult, kernel_basis, rank, smith_normal_form, solve, solve_matrix
from .subquotient import (
    GroupHom,
    InducedMap,
    Subquotient,
    SubquotientError,
    homology_at,
    induced_subquotient_map,
    kernel_lift,
    lattice_contains,
)

__all__ = [
    "FgAbGroup",
    "GroupHom",
    "InducedMap",
    "IntMatrix",
    "SnfResult",
    "Subquotient",
    "SubquotientError",
    "cokernel",
    "homology_at",
    "induced_subquotient_map",
    "kernel_basis",
    "kernel_lift",
    "lattice_contains",
    "rank",
    "smith_normal_form",
    "solve",
    "solve_matrix",
]
