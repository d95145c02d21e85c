"""Noncommutative monoid structures on normal affine toric surfaces.

Exact-arithmetic tools for the rank-1 monoid structures carried by normal
affine toric surfaces: rational cone geometry, sparse Laurent-monomial
algebra, Demazure roots and their locally nilpotent derivations,
comultiplication expansion and machine-checked bialgebra axioms,
classification of admissible cones, separating invariants, central quotients,
opposite monoids, boundary divisors, and chart-level point multiplication.

All values are immutable after construction and every operation is a pure
function, so the whole API is safe for concurrent use without locking.
"""

from .algebra import (
    DerivationRule,
    LaurentElement,
    PoleError,
    TensorElement,
    format_rational,
    is_locally_nilpotent_on,
    parse_rational,
)
from .demazure import (
    DemazureRoot,
    RootPair,
    derivation_for,
    dual_ray_swap,
    is_demazure_root,
    pair_equivalence,
    root_basis,
    roots_up_to,
)
from .lattice import (
    Cone2,
    DegenerateConeError,
    LatticeMap,
    LatticePoint,
    M,
    N,
    RationalPoint,
    box_lattice_points,
    hilbert_basis,
    pairing,
    primitive,
)
from .monoids import (
    BoundaryInfo,
    CheckResult,
    ComultRule,
    ConeClosureError,
    Family,
    HalfPlane,
    MonoidSpec,
    NotAMonoidError,
    Orientation,
    UnsupportedChartError,
    VerificationReport,
    boundary,
    chart_monomial_value,
    chart_unit,
    chart_zero,
    classify_cone,
    comult,
    comult_from_root_pair,
    comult_monomial,
    cone_of_spec,
    counit,
    distinguish,
    image_ideal_codim,
    image_ideal_codim_search,
    multiply_points,
    opposite,
    opposite_witness,
    quotient_by_center,
    restriction_condition,
    restriction_failure,
    tensor_chart_value,
    verify_bialgebra,
    verify_comultiplication,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryInfo",
    "CheckResult",
    "ComultRule",
    "Cone2",
    "ConeClosureError",
    "DegenerateConeError",
    "DemazureRoot",
    "DerivationRule",
    "Family",
    "HalfPlane",
    "LatticeMap",
    "LatticePoint",
    "LaurentElement",
    "M",
    "MonoidSpec",
    "N",
    "NotAMonoidError",
    "Orientation",
    "PoleError",
    "RationalPoint",
    "RootPair",
    "TensorElement",
    "UnsupportedChartError",
    "VerificationReport",
    "boundary",
    "box_lattice_points",
    "chart_monomial_value",
    "chart_unit",
    "chart_zero",
    "classify_cone",
    "comult",
    "comult_from_root_pair",
    "comult_monomial",
    "cone_of_spec",
    "counit",
    "derivation_for",
    "distinguish",
    "dual_ray_swap",
    "format_rational",
    "hilbert_basis",
    "image_ideal_codim",
    "image_ideal_codim_search",
    "is_demazure_root",
    "is_locally_nilpotent_on",
    "multiply_points",
    "opposite",
    "opposite_witness",
    "pair_equivalence",
    "pairing",
    "parse_rational",
    "primitive",
    "quotient_by_center",
    "restriction_condition",
    "restriction_failure",
    "root_basis",
    "roots_up_to",
    "tensor_chart_value",
    "verify_bialgebra",
    "verify_comultiplication",
]
