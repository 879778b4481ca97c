"""Doubly orthogonal quasi-Sudoku Latin squares, quasi-sliced orthogonal
arrays and the sliced space-filling designs built from them."""

from .errors import DesignError
from .mols import (
    LatinSquare,
    MolsSet,
    are_orthogonal,
    cyclic_mols,
    fixture_catalog,
    galois_mols,
    generate_mols,
    validate_latin,
)
from .product import (
    ProductSquare,
    QuasiSudokuSquare,
    direct_product,
    quasi_sudoku_reorder,
    verify_quasi_sudoku,
)
from .projection import (
    ProjectedOverlay,
    ProjectionSpec,
    project_symbol_m,
    project_symbol_n,
    superimpose,
    verify_double_orthogonality,
)
from .report import VerificationReport
from .sfd import (
    SpaceFillingDesign,
    build_sfd,
    expand_levels,
    plan_relabeling,
    verify_2d_stratification,
    verify_design,
    verify_lhd,
)
from .sliced_oa import (
    OrthogonalArray,
    SlicedOA,
    collapse_slices,
    partition_slices,
    unstack,
    verify_oa_strength,
    verify_sliced_oa,
)

__version__ = "0.1.0"
