"""Quantum convolutional stabilizer pairs from difference triangle sets.

Build a systematic self-orthogonal parity row X(D) from the supports of
a strong difference triangle set, reflect the supports to obtain the
companion Z(D), and machine-certify the construction: DTS structure,
self-orthogonality, memory, symplectic commutation and free distance.
"""

__version__ = "0.1.0"

from .csoc import (
    CodeParams,
    CsocReport,
    DifferenceCollision,
    NonStrongFamilyWarning,
    block_toeplitz,
    build_parity_check,
    build_systematic_x,
    code_params,
    constraint_length,
    is_csoc,
    memory,
    parity_supports,
)
from .distance import (
    DistanceCertificate,
    Method,
    certify_dfree,
    column_distance,
    dfree_exact,
    dfree_upper,
)
from .dts import (
    DtsClass,
    DtsFamily,
    SupportSet,
    classify,
    family_from_json,
    from_one_based,
    normalize,
    positive_differences,
    search_strong_dts,
)
from .gf2poly import (
    NEG_INF,
    ONE,
    ZERO,
    D,
    Gf2Poly,
    PolyMatrix,
    coefficient_matrix,
    mat_mul_transpose,
    parse_poly,
    parse_poly_row,
    poly_add,
    poly_mul,
    poly_reverse,
    substitute_inverse,
)
from .reflect import (
    CertificationFlags,
    PreservationReport,
    QccParams,
    StabilizerPair,
    build_z,
    certify,
    check_preservation,
    pair_from_family,
    qcc_params,
    reflect_family,
)
from .symplectic import (
    ReflectionSymmetryReport,
    SymplecticReport,
    check_reflection_symmetry,
    is_commuting,
    sum_index_matrix,
    symplectic_sum,
)
from .tables import TABLE_ROWS, TableRow, rows_for, validate_tables

__all__ = [
    "CodeParams",
    "CsocReport",
    "CertificationFlags",
    "D",
    "DifferenceCollision",
    "DistanceCertificate",
    "DtsClass",
    "DtsFamily",
    "Gf2Poly",
    "Method",
    "NEG_INF",
    "NonStrongFamilyWarning",
    "ONE",
    "PolyMatrix",
    "PreservationReport",
    "QccParams",
    "ReflectionSymmetryReport",
    "StabilizerPair",
    "SupportSet",
    "SymplecticReport",
    "TABLE_ROWS",
    "TableRow",
    "ZERO",
    "block_toeplitz",
    "build_parity_check",
    "build_systematic_x",
    "build_z",
    "certify",
    "certify_dfree",
    "check_preservation",
    "check_reflection_symmetry",
    "classify",
    "code_params",
    "coefficient_matrix",
    "column_distance",
    "constraint_length",
    "dfree_exact",
    "dfree_upper",
    "family_from_json",
    "from_one_based",
    "is_commuting",
    "is_csoc",
    "mat_mul_transpose",
    "memory",
    "normalize",
    "pair_from_family",
    "parity_supports",
    "parse_poly",
    "parse_poly_row",
    "poly_add",
    "poly_mul",
    "poly_reverse",
    "positive_differences",
    "qcc_params",
    "reflect_family",
    "rows_for",
    "search_strong_dts",
    "substitute_inverse",
    "sum_index_matrix",
    "symplectic_sum",
    "validate_tables",
]
