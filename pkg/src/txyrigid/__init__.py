"""Exact rigidity checker, classifier and search for circle-action
fixed-point data under the two-parameter Hirzebruch genus."""

from .algebra import (
    FactoredFraction,
    LaurentZ,
    PolyXY,
    Rational,
    SeriesU,
    UnsupportedDivisionError,
    expand_denominator,
    fraction_is_constant,
    poly_div_exact,
    series_exp,
)
from .classify import (
    FamilyTag,
    ProofTrace,
    classify_two_points,
    make_l1,
    make_s3,
    make_z,
    pairing_check,
    replay_proof,
)
from .genera import (
    FixedPoint,
    FixedPointData,
    GenusReport,
    ah_constant,
    is_rigid,
    limit_symmetry,
    point_term,
    rigidity_defect,
    rigidity_sum,
    specialize,
    substitute_x_pow,
    weight_gcd,
)
from .search import (
    SearchOutcome,
    SearchParams,
    SearchResult,
    SearchSummary,
    canonical_form,
    canonical_key,
    enumerate_data,
    prune,
    search_rigid,
)
from .series import (
    TODD,
    TXY,
    GenusSeries,
    genus_from_coefficients,
    genus_series,
    series_is_constant,
    txy_factor_series,
)

__all__ = [
    "FactoredFraction",
    "FamilyTag",
    "FixedPoint",
    "FixedPointData",
    "GenusReport",
    "GenusSeries",
    "LaurentZ",
    "PolyXY",
    "ProofTrace",
    "Rational",
    "SearchOutcome",
    "SearchParams",
    "SearchResult",
    "SearchSummary",
    "SeriesU",
    "TODD",
    "TXY",
    "UnsupportedDivisionError",
    "ah_constant",
    "canonical_form",
    "canonical_key",
    "classify_two_points",
    "enumerate_data",
    "expand_denominator",
    "fraction_is_constant",
    "genus_from_coefficients",
    "genus_series",
    "is_rigid",
    "limit_symmetry",
    "make_l1",
    "make_s3",
    "make_z",
    "pairing_check",
    "point_term",
    "poly_div_exact",
    "prune",
    "replay_proof",
    "rigidity_defect",
    "rigidity_sum",
    "search_rigid",
    "series_exp",
    "series_is_constant",
    "specialize",
    "substitute_x_pow",
    "txy_factor_series",
    "weight_gcd",
]
