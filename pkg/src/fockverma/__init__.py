"""Exact computations in the hyperelliptic Heisenberg phi-Verma (Fock) module.

The Shapovalov form and its Gram matrices, plus the Casimir tower built from
the Sugawara zero mode and its intertwining with the Legendre operator.
"""

from .cocycle import (
    CocycleFormatError,
    CocycleTable,
    NotHyperellipticError,
    TruncationError,
    Violation,
    WeightFunctional,
    bracket,
    dump_cocycle,
    hyperelliptic_cocycle,
    load_cocycle,
    parse_cocycle,
    table_from_records,
    validate_cocycle,
)
from .fock import (
    AdmissibilityResult,
    GramMatrix,
    ModuleVector,
    annihilate,
    apply_word,
    basis_vector,
    create,
    gram_det,
    gram_matrix,
    is_p_admissible_up_to,
    level_decompose,
    shapovalov,
    vacuum,
)
from .intertwiner import (
    DegenerateLevelError,
    OrthogonalRepresentative,
    canonicality_compare,
    intertwining_check,
    legendre_identify,
    orthogonal_representative,
    phi_map,
    ptilde_gram,
    quotient_psi,
)
from .legendre import (
    TruncatedSeries,
    UniPoly,
    euler_operator,
    genfun_identity_check,
    genfun_series_expansion,
    genfun_truncated,
    legendre,
    legendre_norm,
    legendre_operator,
    poly_inner,
)
from .partitions import (
    Partition,
    format_partition,
    parse_partition,
    partition_count,
    partitions_of,
    z_factor,
)
from .sugawara import apply_L0, apply_Omega, apply_Omega_power, omega_eigenvalue

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityResult",
    "annihilate",
    "apply_L0",
    "apply_Omega",
    "apply_Omega_power",
    "apply_word",
    "basis_vector",
    "bracket",
    "canonicality_compare",
    "CocycleFormatError",
    "CocycleTable",
    "create",
    "DegenerateLevelError",
    "dump_cocycle",
    "euler_operator",
    "format_partition",
    "genfun_identity_check",
    "genfun_series_expansion",
    "genfun_truncated",
    "gram_det",
    "gram_matrix",
    "GramMatrix",
    "hyperelliptic_cocycle",
    "intertwining_check",
    "is_p_admissible_up_to",
    "legendre",
    "legendre_identify",
    "legendre_norm",
    "legendre_operator",
    "level_decompose",
    "load_cocycle",
    "ModuleVector",
    "NotHyperellipticError",
    "omega_eigenvalue",
    "orthogonal_representative",
    "OrthogonalRepresentative",
    "parse_cocycle",
    "parse_partition",
    "Partition",
    "partition_count",
    "partitions_of",
    "phi_map",
    "poly_inner",
    "ptilde_gram",
    "quotient_psi",
    "shapovalov",
    "table_from_records",
    "TruncatedSeries",
    "TruncationError",
    "UniPoly",
    "vacuum",
    "validate_cocycle",
    "Violation",
    "WeightFunctional",
    "z_factor",
]
