"""Exact homological algebra over the integers.

Chain complexes of free abelian groups, their homology, cones and
cylinders, quasi-isomorphism tests, long exact sequences, simplicial
homology, Tor, Ext and Koszul complexes.  All arithmetic is exact.
"""

from .algebra import (
    FgAbGroup,
    GroupHom,
    IntMatrix,
    cokernel,
    homology_at,
    induced_subquotient_map,
    kernel_basis,
    smith_normal_form,
    solve,
)
from .complexes import (
    ChainComplex,
    ComplexError,
    GradedGroup,
    cohomology,
    direct_sum,
    dual,
    hom_complex,
    shift,
    tensor,
)
from .derived import derived_tensor, ext, free_resolution, is_resolution_of, koszul, tor
from .maps import (
    ChainMap,
    ChainMapError,
    ExactnessError,
    Homotopy,
    LongExactSequence,
    Triangle,
    check_exactness,
    cone,
    cylinder,
    find_homotopy,
    induced_on_homology,
    is_quasi_iso,
    les_of_triangle,
    triangle_of,
    validate_map,
)
from .simplicial import SimplicialComplex, SimplicialMap

__version__ = "0.1.0"
