"""Exact certificates for tensor rank over the rationals.

A tensor is presented by a rank-one decomposition: a multiprojective
point set together with weights.  Every computation runs in exact
rational arithmetic, so a PASS in a certificate is a proof, not a
numerical observation.
"""

from . import certify as _certify
from . import geometry as _geometry
from .certify import (
    ASSERTED,
    CLAIM_CACTUS_BOUND,
    CLAIM_EXACT_RANK,
    CLAIM_IDENTIFIABLE,
    CLAIM_MINIMAL_RANK,
    CLAIM_NON_REDUNDANT,
    CLAIM_OBSTRUCTION,
    CLAIM_PINNING,
    CLAIM_SPAN_IDENTITY,
    FAIL,
    PASS,
    BoundReport,
    Certificate,
    Hypothesis,
    PartitionEntry,
    bound_cactus_rank,
    certify_exact_rank,
    certify_identifiability,
    check_non_redundant,
    check_span_intersection_identity,
    obstruct_alt_decompositions,
    pin_projections,
)
from .cli import (
    InstanceParseError,
    certificate_from_json,
    certificate_to_json,
    emit_certificate,
    load_instance,
    run,
)
from .construct import (
    AugmentationError,
    SurveyReport,
    SurveyRow,
    augment_decomposition,
    derive_seed,
    random_decomposition,
    survey,
)
from .geometry import (
    AmbientTensor,
    Cohomology,
    FactorPartition,
    MultiPoint,
    MultiShape,
    PointSet,
    all_partitions,
    assemble_tensor,
    cohomology,
    decomposition_weights,
    factor_matrix,
    factor_projection_sizes,
    factor_rank,
    flattening_rank,
    has_different_coordinates,
    is_degenerate,
    segre_function,
    segre_matrix,
    segre_vector,
)
from .kruskal import (
    ComparisonRecord,
    KruskalReport,
    compare_criteria,
    kruskal_certificate,
    kruskal_rank,
)
from .linalg import (
    RatMatrix,
    format_rational,
    in_row_span,
    parse_rational,
    rat_rank,
    solve_row_combination,
    span_intersection_dim,
)
from .symmetric import (
    SymmetricBounds,
    SymPointSet,
    SymShape,
    assemble_symmetric,
    comon_certify,
    generic_symmetric_rank,
    is_exceptional,
    symmetric_bounds,
    veronese_matrix,
    veronese_vector,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Reset every internal memoization cache."""
    _geometry.clear_caches()
    _certify.check_non_redundant.cache_clear()


__all__ = [
    "ASSERTED",
    "AmbientTensor",
    "AugmentationError",
    "BoundReport",
    "CLAIM_CACTUS_BOUND",
    "CLAIM_EXACT_RANK",
    "CLAIM_IDENTIFIABLE",
    "CLAIM_MINIMAL_RANK",
    "CLAIM_NON_REDUNDANT",
    "CLAIM_OBSTRUCTION",
    "CLAIM_PINNING",
    "CLAIM_SPAN_IDENTITY",
    "Certificate",
    "Cohomology",
    "ComparisonRecord",
    "FAIL",
    "FactorPartition",
    "Hypothesis",
    "InstanceParseError",
    "KruskalReport",
    "MultiPoint",
    "MultiShape",
    "PASS",
    "PartitionEntry",
    "PointSet",
    "RatMatrix",
    "SurveyReport",
    "SurveyRow",
    "SymPointSet",
    "SymShape",
    "SymmetricBounds",
    "all_partitions",
    "assemble_symmetric",
    "assemble_tensor",
    "augment_decomposition",
    "bound_cactus_rank",
    "certificate_from_json",
    "certificate_to_json",
    "certify_exact_rank",
    "certify_identifiability",
    "check_non_redundant",
    "check_span_intersection_identity",
    "clear_caches",
    "cohomology",
    "comon_certify",
    "compare_criteria",
    "decomposition_weights",
    "derive_seed",
    "emit_certificate",
    "factor_matrix",
    "factor_projection_sizes",
    "factor_rank",
    "flattening_rank",
    "format_rational",
    "generic_symmetric_rank",
    "has_different_coordinates",
    "in_row_span",
    "is_degenerate",
    "is_exceptional",
    "kruskal_certificate",
    "kruskal_rank",
    "load_instance",
    "obstruct_alt_decompositions",
    "parse_rational",
    "pin_projections",
    "random_decomposition",
    "rat_rank",
    "run",
    "segre_function",
    "segre_matrix",
    "segre_vector",
    "solve_row_combination",
    "span_intersection_dim",
    "survey",
    "symmetric_bounds",
    "veronese_matrix",
    "veronese_vector",
]
