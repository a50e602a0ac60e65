"""Exact arithmetic for Fibonacci determinant triangles and their graph families.

The package builds the determinant Hosoya triangle and the Hosoya triangle,
extracts the symmetric matrices embedded along their left edge, reduces them
mod 2 to obtain three infinite cograph families, and verifies every structural
and spectral claim about those families with integer-only computations.
"""

__version__ = "0.1.0"

from .fibcore import fib, fib_is_even
from .triangles import det_entry, divisibility_witnesses, genfunc_table, hosoya_entry, row
from .matrices import (
    BitMatrix,
    ExactMatrix,
    RankTwoDecomposition,
    det_hosoya_matrix,
    exact_rank,
    hosoya_matrix,
    mod2,
    rank2_vectors,
)
from .graphs import FamilySpec, Graph, family_graph, residue_relabel
from .spectra import IntPolynomial, char_poly, is_integral

__all__ = [
    "fib",
    "fib_is_even",
    "det_entry",
    "hosoya_entry",
    "row",
    "divisibility_witnesses",
    "genfunc_table",
    "ExactMatrix",
    "BitMatrix",
    "RankTwoDecomposition",
    "det_hosoya_matrix",
    "hosoya_matrix",
    "rank2_vectors",
    "mod2",
    "exact_rank",
    "Graph",
    "FamilySpec",
    "family_graph",
    "residue_relabel",
    "IntPolynomial",
    "char_poly",
    "is_integral",
]
