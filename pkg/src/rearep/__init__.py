"""Exact finite-dimensional representations of the reflection equation algebra
built from a Hecke R-matrix.
"""
from .family import RepFamily
from .hecke import (
    Partition,
    StandardTableau,
    contents,
    jucys_murphy,
    lr_coefficients,
    partitions_of,
    projector_family,
    q_antisymmetrizer,
    q_symmetrizer,
    standard_tableaux,
    young_projector,
)
from .oracle import (
    VerificationReport,
    central_spectrum,
    check_chain_traces,
    check_relations,
    commutant_dimension,
    find_intertwiner,
)
from .rep_b import (
    char_b_col,
    char_b_row,
    char_b_s1,
    fundamental_b,
    project_b,
    renormalize,
    sl_char_b,
    sl_reduce,
    tensor_power_b,
)
from .rep_r import (
    char_r,
    check_b_r_equivalence,
    indecomposable_example,
    project_r,
    r_type_rep,
    rank_one_factorization,
    sl_reduce_r,
    zeta_r_s1,
)
from .rmatrix import (
    RMatrixProfile,
    catalog_standard_hecke,
    catalog_uq_sl2,
    check_hecke,
    check_yang_baxter,
    skew_inverse,
    symmetry_rank,
    validate,
)
from .scalar import LaurentRational, lam, parse_scalar, q, q_int, specialize
from .tensor import QMatrix, embed_at, partial_trace, r_chain, rank_exact, solve_linear

__all__ = [
    "catalog_standard_hecke",
    "catalog_uq_sl2",
    "central_spectrum",
    "char_b_col",
    "char_b_row",
    "char_b_s1",
    "char_r",
    "check_chain_traces",
    "check_b_r_equivalence",
    "check_hecke",
    "check_relations",
    "check_yang_baxter",
    "commutant_dimension",
    "contents",
    "embed_at",
    "find_intertwiner",
    "fundamental_b",
    "indecomposable_example",
    "jucys_murphy",
    "lam",
    "LaurentRational",
    "lr_coefficients",
    "parse_scalar",
    "partial_trace",
    "Partition",
    "partitions_of",
    "project_b",
    "project_r",
    "projector_family",
    "q",
    "q_antisymmetrizer",
    "q_int",
    "q_symmetrizer",
    "QMatrix",
    "r_chain",
    "r_type_rep",
    "rank_exact",
    "rank_one_factorization",
    "renormalize",
    "RepFamily",
    "RMatrixProfile",
    "skew_inverse",
    "sl_char_b",
    "sl_reduce",
    "sl_reduce_r",
    "solve_linear",
    "specialize",
    "standard_tableaux",
    "StandardTableau",
    "symmetry_rank",
    "tensor_power_b",
    "validate",
    "VerificationReport",
    "young_projector",
    "zeta_r_s1",
]

__version__ = "0.1.0"
