"""Decision procedures returning :class:`PropertyVerdict` values."""

from .annihilators import annihilator_family, check_baer, check_quasi_baer, idempotent_generators
from .armendariz import armendariz_violations, check_skew_armendariz, monomial_product
from .basic import check_basic, check_compatible, check_rigid, check_stability
from .construction import (
    ConstantExtraction,
    ConstructionReport,
    annihilator_idempotent_witness,
    audit_hypotheses,
    constant_annihilator_extraction,
    ideal_slice,
    ideals_of,
    leading_coefficient_ideal,
    right_annihilator_slice,
)
from .recheck import recheck_witness
from .verdict import PropertyVerdict, Status

__all__ = [
    "ConstantExtraction",
    "ConstructionReport",
    "PropertyVerdict",
    "Status",
    "annihilator_family",
    "annihilator_idempotent_witness",
    "armendariz_violations",
    "audit_hypotheses",
    "check_baer",
    "check_basic",
    "check_compatible",
    "check_quasi_baer",
    "check_rigid",
    "check_skew_armendariz",
    "check_stability",
    "constant_annihilator_extraction",
    "idempotent_generators",
    "ideal_slice",
    "ideals_of",
    "leading_coefficient_ideal",
    "monomial_product",
    "recheck_witness",
    "right_annihilator_slice",
]
