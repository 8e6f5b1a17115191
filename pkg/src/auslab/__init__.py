"""Exact computation of Auslander-type conditions for finite-dimensional
algebras over F_p, and of how they transfer to lower triangular matrix
algebras T_t(A)."""
from .algebra import (
    BimoduleData,
    ParseError,
    StructureAlgebra,
    TriangularAlgebra,
    dump_algebra,
    lemma23_triangular,
    load_algebra,
    local_rad_square_zero,
    lower_triangular,
    matrix_algebra,
    parse_algebra,
    path_algebra_A2,
    prime_field,
    product,
    save_algebra,
    triangular_from_bimodule,
    truncated_polynomial,
)
from .conditions import (
    dominant_numbers,
    gnk_iff_lnop,
    is_Gnk,
    is_ln_op,
    verify_corollary_3_8,
    verify_theorem_3_6,
    verify_theorem_3_7,
)
from .homological import (
    MINUS_INFINITY,
    AtLeast,
    ExtDim,
    Finite,
    RfdProfile,
    injective_dimension,
    injective_envelope,
    minimal_injective_resolution,
    minimal_projective_resolution,
    projective_cover,
    projective_dimension,
    rfd_profile,
)
from .linalg import PrimeField
from .modules import (
    RightModule,
    dump_module,
    hom_space,
    is_isomorphic,
    parse_module,
    regular_module,
    simple_modules,
    tensor_over,
)
from .triples import Triple, is_flat_triple, module_to_triple, triple_to_module

__version__ = "0.1.0"
